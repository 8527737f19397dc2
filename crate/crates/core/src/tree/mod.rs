//! The lexical tree `T` whose nodes are the δ-strings of all reduced graphs,
//! together with its sequence notations and the counting results built on it.

mod catalan;

pub use catalan::{
    catalan_triangle, level_counts, s_sequences, second_symbol_counts, tk_components,
    CatalanTriangle,
};

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lexical::{DeltaString, Symbol};
use crate::quotient::{check_capacity, MAX_K};
use crate::words::BinaryWord;

pub fn root() -> DeltaString {
    DeltaString::from_symbols_unchecked(vec![Symbol::Color(1), Symbol::Color(0), Symbol::Star])
}

fn well_formed(d: &DeltaString) -> Result<()> {
    DeltaString::from_symbols(d.symbols().to_vec()).map(|_| ())
}

/// `k|X` becomes `(k+1)|X|k|*`.
pub fn left_child(d: &DeltaString) -> Result<DeltaString> {
    well_formed(d)?;
    let k = d.k() as u8;
    let mut symbols = Vec::with_capacity(d.len() + 2);
    symbols.push(Symbol::Color(k + 1));
    symbols.extend_from_slice(&d.symbols()[1..]);
    symbols.push(Symbol::Color(k));
    symbols.push(Symbol::Star);
    Ok(DeltaString::from_symbols_unchecked(symbols))
}

/// `k|X|Y|*` becomes `k|Y|X|*` when `X` starts with `j < k-1` and `Y` with `j+1`.
pub fn right_child(d: &DeltaString) -> Result<Option<DeltaString>> {
    well_formed(d)?;
    let k = d.k();
    let s = d.symbols();
    let j = match s[1].color() {
        Some(j) => j as usize,
        None => return Ok(None),
    };
    if j + 1 >= k {
        return Ok(None);
    }
    let p = d.position_of(j as u8 + 1).expect("well-formed δ-strings carry every color");
    Ok(Some(swap_blocks(s, p)))
}

/// `k | s[p..n-1] | s[1..p] | *`.
fn swap_blocks(s: &[Symbol], p: usize) -> DeltaString {
    let n = s.len();
    let mut symbols = Vec::with_capacity(n);
    symbols.push(s[0]);
    symbols.extend_from_slice(&s[p..n - 1]);
    symbols.extend_from_slice(&s[1..p]);
    symbols.push(Symbol::Star);
    DeltaString::from_symbols_unchecked(symbols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Left,
    Right,
}

/// The parent of a tree node and the kind of step leading down to it.
pub fn parent(d: &DeltaString) -> Result<Option<(DeltaString, Step)>> {
    well_formed(d)?;
    if *d == root() {
        return Ok(None);
    }
    let s = d.symbols();
    let n = s.len();
    let k = d.k();
    if n >= 5 && s[n - 2] == Symbol::Color(k as u8 - 1) && s[n - 1] == Symbol::Star {
        let mut symbols = Vec::with_capacity(n - 2);
        symbols.push(Symbol::Color(k as u8 - 1));
        symbols.extend_from_slice(&s[1..n - 2]);
        if let Ok(candidate) = DeltaString::from_symbols(symbols) {
            if left_child(&candidate)? == *d {
                return Ok(Some((candidate, Step::Left)));
            }
        }
    }
    if let Some(second) = s[1].color().filter(|&c| c >= 1) {
        if let Some(p) = d.position_of(second - 1).filter(|&p| p > 1) {
            let candidate = swap_blocks(s, p);
            if right_child(&candidate)?.as_ref() == Some(d) {
                return Ok(Some((candidate, Step::Right)));
            }
        }
    }
    Err(Error::NotATreeNode(d.to_string()))
}

/// Nondecreasing `a_0..a_{k-1}` with `a_0 = 0` and `a_i <= i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ASeq(Vec<u8>);

impl ASeq {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let ok = !entries.is_empty()
            && entries[0] == 0
            && entries
                .windows(2)
                .enumerate()
                .all(|(i, w)| w[0] <= w[1] && w[1] as usize <= i + 1);
        if ok {
            Ok(ASeq(entries))
        } else {
            Err(Error::InvalidSequence(digits(&entries), "need a_0 = 0 and a_{i-1} <= a_i <= i"))
        }
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    fn last(&self) -> u8 {
        *self.0.last().expect("nonempty")
    }

    /// Left child appends a copy of the last entry; right child bumps the
    /// last entry and exists only while it is below `k-1`.
    pub fn children(&self) -> (ASeq, Option<ASeq>) {
        let mut left = self.0.clone();
        left.push(self.last());
        let right = (self.last() as usize + 1 < self.k()).then(|| {
            let mut r = self.0.clone();
            *r.last_mut().unwrap() += 1;
            ASeq(r)
        });
        (ASeq(left), right)
    }

    /// All sequences of length `k`, in lexicographic order.
    pub fn all(k: usize) -> Vec<ASeq> {
        let mut out = vec![vec![0u8]];
        for i in 1..k {
            out = out
                .into_iter()
                .flat_map(|a| {
                    let last = *a.last().unwrap();
                    (last..=i as u8).map(move |v| {
                        let mut b = a.clone();
                        b.push(v);
                        b
                    })
                })
                .collect();
        }
        out.into_iter().map(ASeq).collect()
    }
}

impl fmt::Display for ASeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&digits(&self.0))
    }
}

impl FromStr for ASeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ASeq::new(parse_digits(s)?)
    }
}

/// Increments `b_i = a_i - a_{i-1}`. Valid iff every prefix sum up to `i`
/// is at most `i`. Ordered shortlex, so the empty root comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BSeq(Vec<u8>);

impl BSeq {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let mut sum = 0usize;
        for (i, &b) in entries.iter().enumerate() {
            sum += b as usize;
            if sum > i + 1 {
                return Err(Error::InvalidSequence(
                    digits(&entries),
                    "prefix sums must satisfy b_1 + .. + b_i <= i",
                ));
            }
        }
        Ok(BSeq(entries))
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }
}

impl Ord for BSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for BSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&digits(&self.0))
        }
    }
}

impl FromStr for BSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "∅" {
            return Ok(BSeq(Vec::new()));
        }
        BSeq::new(parse_digits(s)?)
    }
}

fn digits(v: &[u8]) -> String {
    v.iter()
        .map(|&d| char::from_digit(d as u32, 36).unwrap_or('?'))
        .collect()
}

fn parse_digits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| {
            c.to_digit(36)
                .map(|d| d as u8)
                .ok_or_else(|| Error::InvalidSequence(s.to_string(), "expected digits"))
        })
        .collect()
}

pub fn psi(a: &ASeq) -> BSeq {
    BSeq(a.0.windows(2).map(|w| w[1] - w[0]).collect())
}

pub fn psi_inverse(b: &BSeq, k: usize) -> Result<ASeq> {
    if b.0.len() + 1 != k {
        return Err(Error::InvalidSequence(b.to_string(), "length must be k - 1"));
    }
    let mut a = Vec::with_capacity(k);
    a.push(0u8);
    for &x in &b.0 {
        a.push(a.last().unwrap() + x);
    }
    ASeq::new(a)
}

/// Walks down from the root: after each left step, `a_i - a_{i-1}` right steps.
pub fn phi(a: &ASeq) -> DeltaString {
    let mut d = root();
    for w in a.0.windows(2) {
        d = left_child(&d).expect("tree nodes are well formed");
        for _ in w[0]..w[1] {
            d = right_child(&d)
                .expect("tree nodes are well formed")
                .expect("ASeq bounds keep right children defined");
        }
    }
    d
}

pub fn phi_inverse(d: &DeltaString) -> Result<ASeq> {
    let mut steps = Vec::new();
    let mut cur = d.clone();
    while let Some((p, step)) = parent(&cur)? {
        steps.push(step);
        cur = p;
    }
    let mut a = vec![0u8];
    for step in steps.into_iter().rev() {
        match step {
            Step::Left => a.push(*a.last().unwrap()),
            Step::Right => *a.last_mut().unwrap() += 1,
        }
    }
    ASeq::new(a).map_err(|_| Error::NotATreeNode(d.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub delta: DeltaString,
    pub aseq: ASeq,
    pub bseq: BSeq,
}

impl TreeNode {
    pub fn from_aseq(aseq: ASeq) -> Self {
        TreeNode {
            delta: phi(&aseq),
            bseq: psi(&aseq),
            aseq,
        }
    }

    pub fn k(&self) -> usize {
        self.aseq.k()
    }
}

/// Vertices of `R_k` as tree nodes, ordered by their increment sequences.
pub fn rk_nodes_in_order(k: usize) -> Result<Vec<TreeNode>> {
    check_capacity(k, MAX_K)?;
    let mut nodes: Vec<TreeNode> = ASeq::all(k).into_iter().map(TreeNode::from_aseq).collect();
    nodes.sort_by(|x, y| x.bseq.cmp(&y.bseq));
    Ok(nodes)
}

/// For each `R_k` vertex in presentation order, its `n` lower-level members
/// paired with their ℵ images. Each class starts at its least member.
pub fn mk_vertex_listing(k: usize) -> Result<Vec<(BinaryWord, BinaryWord)>> {
    check_capacity(k, 6)?;
    let mut out = Vec::new();
    for node in rk_nodes_in_order(k)? {
        let rep = node.delta.necklace()?.rep();
        for i in 0..rep.len() as i64 {
            let w = rep.rotate(i);
            out.push((w, w.aleph()));
        }
    }
    Ok(out)
}

/// The first `depth` levels of `T`, each read left to right.
pub fn tree_levels(depth: usize) -> Vec<Vec<TreeNode>> {
    let mut levels: Vec<Vec<TreeNode>> = Vec::new();
    let mut frontier = VecDeque::from([TreeNode::from_aseq(ASeq(vec![0]))]);
    while levels.len() < depth && !frontier.is_empty() {
        let level: Vec<TreeNode> = frontier.drain(..).collect();
        for node in &level {
            let (l, r) = node.aseq.children();
            frontier.push_back(TreeNode::from_aseq(l));
            if let Some(r) = r {
                frontier.push_back(TreeNode::from_aseq(r));
            }
        }
        levels.push(level);
    }
    levels
}
