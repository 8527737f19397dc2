//! Binary words of odd length `n = 2k + 1` and their rotation classes.
//!
//! A word stores `b_0..b_{n-1}` with `b_i` at bit `i` of a `u64`. Rotation by
//! `i` is multiplication by `x^i` modulo `1 + x^n`, so `rotate(w, 1)` moves
//! `b_{n-1}` to the front: `00011 -> 10001`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: u64,
    len: u8,
    weight: u8,
}

impl BinaryWord {
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len < 3 || len > MAX_LEN || len % 2 == 0 {
            return Err(Error::BadLength(len));
        }
        if bits >> len != 0 {
            return Err(Error::BadBits(format!("{bits:#x} has bits beyond length {len}")));
        }
        Ok(Self::from_raw(len, bits))
    }

    #[inline]
    pub(crate) fn from_raw(len: usize, bits: u64) -> Self {
        Self {
            bits,
            len: len as u8,
            weight: bits.count_ones() as u8,
        }
    }

    /// `0^{k+1} 1^k`, the word behind the vertex `[00…011]`.
    pub fn zeros_then_ones(k: usize) -> Self {
        let n = 2 * k + 1;
        Self::from_raw(n, mask(k) << (k + 1))
    }

    /// `0 (01)^k`, the word behind the vertex `[001…01]`.
    pub fn zero_then_alternating(k: usize) -> Self {
        let n = 2 * k + 1;
        let bits = (0..k).fold(0u64, |acc, i| acc | 1 << (2 + 2 * i));
        Self::from_raw(n, bits)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.weight as usize
    }

    /// The level parameter `k` with `n = 2k + 1`.
    #[inline]
    pub fn k(&self) -> usize {
        (self.len as usize - 1) / 2
    }

    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        ((self.bits >> (i % self.len())) & 1) as u8
    }

    pub fn flip(&self, i: usize) -> Self {
        Self::from_raw(self.len(), self.bits ^ (1 << (i % self.len())))
    }

    /// Cyclic shift: entry `b_j` moves to position `j + i (mod n)`.
    pub fn rotate(&self, i: i64) -> Self {
        let n = self.len();
        let s = i.rem_euclid(n as i64) as usize;
        if s == 0 {
            return *self;
        }
        let bits = ((self.bits << s) | (self.bits >> (n - s))) & mask(n);
        Self::from_raw(n, bits)
    }

    /// Complemented reversal `b_0..b_{n-1} -> ~b_{n-1}..~b_0`.
    pub fn aleph(&self) -> Self {
        let n = self.len();
        let reversed = self.bits.reverse_bits() >> (64 - n);
        Self::from_raw(n, !reversed & mask(n))
    }

    pub fn zero_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.bit(i) == 0)
    }

    pub fn one_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.bit(i) == 1)
    }

    /// Key whose integer order is the left-to-right lexicographic order of
    /// the bit string (`b_0` most significant).
    #[inline]
    pub fn lex_key(&self) -> u64 {
        self.bits.reverse_bits() >> (64 - self.len())
    }

    /// Lexicographically least rotation together with the shift that
    /// produces it from `self`.
    pub fn least_rotation(&self) -> (Self, usize) {
        let mut best = *self;
        let mut shift = 0;
        for s in 1..self.len() {
            let r = self.rotate(s as i64);
            if r.lex_key() < best.lex_key() {
                best = r;
                shift = s;
            }
        }
        (best, shift)
    }

    /// True when the word reads `~b_k..~b_1 0 b_1..b_k` around its centre
    /// position `k`; flipping the centre then yields `aleph(self)`.
    pub fn is_horizontal_form(&self) -> bool {
        let k = self.k();
        self.bit(k) == 0 && (1..=k).all(|i| self.bit(k + i) != self.bit(k - i))
    }
}

#[inline]
fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then(self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' if i < 64 => bits |= 1 << i,
                _ => return Err(Error::BadBits(s.to_string())),
            }
        }
        Self::new(s.chars().count(), bits)
    }
}

/// All words of length `n` and the given weight, in increasing order of
/// their raw bit value.
pub fn words_of_weight(n: usize, weight: usize) -> impl Iterator<Item = BinaryWord> {
    let first = if weight == 0 { 0 } else { mask(weight) };
    let limit = mask(n);
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ <= limit && r != 0).then_some(succ)
        };
        Some(BinaryWord::from_raw(n, cur))
    })
}

/// A rotation class, stored by its lexicographically least member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    rep: BinaryWord,
}

impl Necklace {
    pub fn of(w: &BinaryWord) -> Self {
        Self {
            rep: w.least_rotation().0,
        }
    }

    #[inline]
    pub fn rep(&self) -> BinaryWord {
        self.rep
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rep.len()
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.rep.weight()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.rep.k()
    }

    /// `rep` rotated by `0, 1, …, n-1`.
    pub fn members(&self) -> impl Iterator<Item = BinaryWord> + '_ {
        (0..self.len()).map(move |i| self.rep.rotate(i as i64))
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        w.len() == self.len() && Necklace::of(w) == *self
    }

    /// Shift `s` with `rep.rotate(s) == w`, if `w` belongs to the class.
    pub fn shift_of(&self, w: &BinaryWord) -> Option<usize> {
        if w.len() != self.len() {
            return None;
        }
        (0..self.len()).find(|&s| self.rep.rotate(s as i64) == *w)
    }

    /// The class of `aleph(rep)`; defined on the lower level only.
    pub fn aleph_pi(&self) -> Result<Necklace> {
        let k = self.k();
        if self.weight() != k {
            return Err(Error::WeightMismatch {
                expected: k,
                found: self.weight(),
            });
        }
        Ok(Necklace::of(&self.rep.aleph()))
    }

    /// Inverse of [`Necklace::aleph_pi`]; defined on the upper level only.
    pub fn aleph_pi_inverse(&self) -> Result<Necklace> {
        let k = self.k();
        if self.weight() != k + 1 {
            return Err(Error::WeightMismatch {
                expected: k + 1,
                found: self.weight(),
            });
        }
        Ok(Necklace::of(&self.rep.aleph()))
    }

    /// Number of members of the form `~b_k..~b_1 0 b_1..b_k`. Each such member
    /// is the lower end of one horizontal edge of `M_k`.
    pub fn horizontal_degree(&self) -> Result<usize> {
        let k = self.k();
        if self.weight() != k {
            return Err(Error::WeightMismatch {
                expected: k,
                found: self.weight(),
            });
        }
        Ok(self.members().filter(BinaryWord::is_horizontal_form).count())
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rep)
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace{self}")
    }
}

pub fn necklace_of(w: &BinaryWord) -> Necklace {
    Necklace::of(w)
}

/// Necklaces of length `n` and the given weight, sorted by representative.
pub fn necklaces(n: usize, weight: usize) -> Vec<Necklace> {
    words_of_weight(n, weight)
        .filter(|w| w.least_rotation().1 == 0)
        .map(|rep| Necklace { rep })
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}
