//! Lexical edge coloring of the middle levels and the colorful δ notation.
//!
//! A lower word with `b_0 = 0` is read as a lattice path from `(0,0)` to
//! `(k,k)`: `b_i = 0` steps right, `b_i = 1` steps up. The color of the edge
//! obtained by setting `b_0 = 1` is the number of right steps taken on or
//! below the diagonal.

mod factorization;
mod table;

pub use factorization::{
    mk_edge_color, one_factorization_mk, one_factorization_quotient, one_factorization_reduced,
    FactorizationError, OneFactorization,
};
pub use table::{adjacency_table, AdjacencyTable};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{BinaryWord, Necklace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LexColor(pub u8);

impl LexColor {
    #[inline]
    pub fn value(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for LexColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which right steps count as "below the diagonal".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiagonalRule {
    /// A right step from `(x, y)` counts iff `y <= x`.
    #[default]
    Inclusive,
    /// A right step from `(x, y)` counts iff `y < x`.
    Strict,
}

pub fn lexical_color(w: &BinaryWord) -> Result<LexColor> {
    lexical_color_with(w, DiagonalRule::Inclusive)
}

pub fn lexical_color_with(w: &BinaryWord, rule: DiagonalRule) -> Result<LexColor> {
    let k = w.k();
    if w.weight() != k {
        return Err(Error::WeightMismatch {
            expected: k,
            found: w.weight(),
        });
    }
    if w.bit(0) != 0 {
        return Err(Error::BadEntry {
            word: w.to_string(),
            index: 0,
            expected: 0,
        });
    }
    let (mut x, mut y, mut count) = (0usize, 0usize, 0u8);
    for i in 1..w.len() {
        if w.bit(i) == 0 {
            let below = match rule {
                DiagonalRule::Inclusive => y <= x,
                DiagonalRule::Strict => y < x,
            };
            if below {
                count += 1;
            }
            x += 1;
        } else {
            y += 1;
        }
    }
    Ok(LexColor(count))
}

/// Color of the edge obtained by clearing `b_{n-1}` of an upper word.
pub fn lexical_color_upper(w: &BinaryWord) -> Result<LexColor> {
    let k = w.k();
    if w.weight() != k + 1 {
        return Err(Error::WeightMismatch {
            expected: k + 1,
            found: w.weight(),
        });
    }
    let last = w.len() - 1;
    if w.bit(last) != 1 {
        return Err(Error::BadEntry {
            word: w.to_string(),
            index: last,
            expected: 1,
        });
    }
    lexical_color(&w.flip(last).rotate(1))
}

/// Color of the `M_k` edge that flips position `p` of `w` (either level).
pub fn flip_color(w: &BinaryWord, p: usize) -> Result<LexColor> {
    let k = w.k();
    let lower = if w.weight() == k + 1 && w.bit(p) == 1 {
        w.flip(p)
    } else if w.weight() == k && w.bit(p) == 0 {
        *w
    } else {
        return Err(Error::BadEntry {
            word: w.to_string(),
            index: p,
            expected: if w.weight() == k { 0 } else { 1 },
        });
    };
    lexical_color(&lower.rotate(-(p as i64)))
}

/// The flippable positions of a middle-level word with their colors.
pub fn incident_colors(w: &BinaryWord) -> Result<Vec<(usize, LexColor)>> {
    let k = w.k();
    let flippable: Vec<usize> = if w.weight() == k {
        w.zero_positions().collect()
    } else if w.weight() == k + 1 {
        w.one_positions().collect()
    } else {
        return Err(Error::WeightMismatch {
            expected: k,
            found: w.weight(),
        });
    };
    flippable
        .into_iter()
        .map(|p| flip_color(w, p).map(|c| (p, c)))
        .collect()
}

/// The neighbor of `w` in `M_k` along the edge of the given color.
pub fn neighbor_by_color(w: &BinaryWord, color: LexColor) -> Result<BinaryWord> {
    incident_colors(w)?
        .into_iter()
        .find(|&(_, c)| c == color)
        .map(|(p, _)| w.flip(p))
        .ok_or_else(|| Error::UnknownEdge(format!("{w} has no edge of color {color}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Color(u8),
    Star,
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

impl Symbol {
    fn to_char(self) -> char {
        match self {
            Symbol::Star => '*',
            Symbol::Color(c) => DIGITS[c as usize] as char,
        }
    }

    fn from_char(ch: char) -> Option<Self> {
        if ch == '*' {
            return Some(Symbol::Star);
        }
        DIGITS
            .iter()
            .position(|&d| d as char == ch)
            .map(|i| Symbol::Color(i as u8))
    }

    pub fn color(self) -> Option<u8> {
        match self {
            Symbol::Color(c) => Some(c),
            Symbol::Star => None,
        }
    }
}

/// Colorful notation: one symbol per position of the δ-canonical word, the
/// lexical color at zeros and `*` at ones. Colors past 9 print as `a`, `b`, ….
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaString {
    symbols: Vec<Symbol>,
}

impl DeltaString {
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self> {
        let d = DeltaString { symbols };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>) -> Self {
        DeltaString { symbols }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why| Err(Error::MalformedDelta(self.to_string(), why));
        let n = self.symbols.len();
        if n < 3 || n % 2 == 0 {
            return bad("length must be odd and at least 3");
        }
        let k = (n - 1) / 2;
        if self.symbols[0] != Symbol::Color(k as u8) {
            return bad("leading symbol must be k");
        }
        let mut seen = vec![false; k + 1];
        let mut stars = 0;
        for s in &self.symbols {
            match *s {
                Symbol::Star => stars += 1,
                Symbol::Color(c) if (c as usize) <= k && !seen[c as usize] => seen[c as usize] = true,
                Symbol::Color(_) => return bad("colors must be distinct values in 0..=k"),
            }
        }
        if stars != k {
            return bad("expected exactly k stars");
        }
        Ok(())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Leading symbol, which equals the level `k` of the vertex.
    pub fn k(&self) -> usize {
        self.symbols[0].color().unwrap_or(0) as usize
    }

    pub fn color_symbols(&self) -> impl Iterator<Item = u8> + '_ {
        self.symbols.iter().filter_map(|s| s.color())
    }

    /// Position of the given color symbol.
    pub fn position_of(&self, color: u8) -> Option<usize> {
        self.symbols.iter().position(|&s| s == Symbol::Color(color))
    }

    pub fn reversed(&self) -> DeltaString {
        DeltaString {
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }

    /// The δ-canonical word: zeros at color positions, ones at stars.
    pub fn word(&self) -> Result<BinaryWord> {
        let bits = self
            .symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Symbol::Star)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        BinaryWord::new(self.symbols.len(), bits)
    }

    pub fn necklace(&self) -> Result<Necklace> {
        Ok(Necklace::of(&self.word()?))
    }
}

impl fmt::Display for DeltaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols.iter().map(|s| s.to_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for DeltaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ({self})")
    }
}

impl FromStr for DeltaString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|ch| Symbol::from_char(ch).ok_or_else(|| Error::MalformedDelta(s.to_string(), "bad symbol")))
            .collect::<Result<Vec<_>>>()?;
        DeltaString::from_symbols(symbols)
    }
}

impl Serialize for DeltaString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The member of `c` whose leading zero carries color `k`.
pub fn delta_canonical_word(c: &Necklace) -> Result<BinaryWord> {
    let k = c.k();
    if c.weight() != k {
        return Err(Error::WeightMismatch {
            expected: k,
            found: c.weight(),
        });
    }
    for m in c.members() {
        if m.bit(0) == 0 && lexical_color(&m)?.value() == k {
            return Ok(m);
        }
    }
    unreachable!("every lower necklace has a zero of color k")
}

pub fn delta(c: &Necklace) -> Result<DeltaString> {
    let w = delta_canonical_word(c)?;
    let mut symbols = vec![Symbol::Star; w.len()];
    for (p, color) in incident_colors(&w)? {
        symbols[p] = Symbol::Color(color.0);
    }
    Ok(DeltaString::from_symbols_unchecked(symbols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::necklaces;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn color(s: &str) -> u8 {
        lexical_color(&w(s)).unwrap().0
    }

    #[test]
    fn drawn_m2_colors() {
        assert_eq!(color("00011"), 2);
        assert_eq!(color("00110"), 1);
        assert_eq!(color("01100"), 0);
        assert_eq!(color("00101"), 2);
        assert_eq!(color("01010"), 0);
        assert_eq!(color("01001"), 1);
    }

    #[test]
    fn strict_rule_breaks_drawn_colors() {
        let strict = |s: &str| lexical_color_with(&w(s), DiagonalRule::Strict).unwrap().0;
        let goldens = [("00011", 2), ("00110", 1), ("01100", 0), ("00101", 2), ("01010", 0), ("01001", 1)];
        assert!(goldens.iter().any(|&(s, c)| strict(s) != c));
    }

    // Grid walk written out independently: all right steps first.
    #[test]
    fn zeros_then_ones_has_color_k() {
        for k in 1..=8 {
            assert_eq!(lexical_color(&BinaryWord::zeros_then_ones(k)).unwrap().value(), k);
        }
    }

    #[test]
    fn upper_colors() {
        let up = |s: &str| lexical_color_upper(&w(s)).unwrap().0;
        assert_eq!(up("00111"), 2);
        assert_eq!(up("10011"), 1);
        assert_eq!(up("11001"), 0);
        assert_eq!(up("01011"), 2);
        assert_eq!(up("10101"), 0);
        assert_eq!(up("01101"), 1);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(lexical_color(&w("10001")), Err(Error::BadEntry { index: 0, .. })));
        assert!(matches!(lexical_color(&w("00111")), Err(Error::WeightMismatch { .. })));
        assert!(matches!(lexical_color_upper(&w("00110")), Err(Error::WeightMismatch { .. })));
        assert!(matches!(lexical_color_upper(&w("01110")), Err(Error::BadEntry { index: 4, .. })));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&Necklace::of(&w("00011"))).unwrap().to_string(), "210**");
        assert_eq!(delta(&Necklace::of(&w("00101"))).unwrap().to_string(), "20*1*");
        let mut r3: Vec<String> = necklaces(7, 3).iter().map(|c| delta(c).unwrap().to_string()).collect();
        r3.sort();
        let mut expected = vec!["30*1*2*", "31*20**", "320*1**", "310**2*", "3210***"];
        expected.sort();
        assert_eq!(r3, expected);
    }

    #[test]
    fn delta_round_trips_through_its_word() {
        for k in 1..=6 {
            for c in necklaces(2 * k + 1, k) {
                let d = delta(&c).unwrap();
                assert_eq!(d.necklace().unwrap(), c);
                assert_eq!(d.to_string().parse::<DeltaString>().unwrap(), d);
            }
        }
    }

    #[test]
    fn malformed_delta_strings() {
        assert!("20*1".parse::<DeltaString>().is_err());
        assert!("10*1*".parse::<DeltaString>().is_err());
        assert!("22*1*".parse::<DeltaString>().is_err());
        assert!("2**1*".parse::<DeltaString>().is_err());
        assert!("2x*1*".parse::<DeltaString>().is_err());
    }

    #[test]
    fn colors_at_a_vertex_are_a_bijection() {
        for k in 1..=7 {
            let n = 2 * k + 1;
            for c in necklaces(n, k) {
                let mut colors: Vec<usize> =
                    incident_colors(&c.rep()).unwrap().iter().map(|(_, c)| c.value()).collect();
                colors.sort();
                assert_eq!(colors, (0..=k).collect::<Vec<_>>(), "{c}");
                let leading_k = c
                    .members()
                    .filter(|m| m.bit(0) == 0 && lexical_color(m).unwrap().value() == k)
                    .count();
                assert_eq!(leading_k, 1);
            }
        }
    }

    #[test]
    fn neighbor_by_color_walks_both_levels() {
        let lower = w("00101");
        let up = neighbor_by_color(&lower, LexColor(1)).unwrap();
        assert_eq!(up, w("00111"));
        assert_eq!(neighbor_by_color(&up, LexColor(1)).unwrap(), lower);
        assert!(neighbor_by_color(&lower, LexColor(5)).is_err());
    }
}
