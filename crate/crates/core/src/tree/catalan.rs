use std::fmt;

use super::{right_child, rk_nodes_in_order, tree_levels, TreeNode};
use crate::error::Result;
use crate::lexical::DeltaString;
use crate::quotient::{check_capacity, MAX_K};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanTriangle {
    rows: Vec<Vec<u64>>,
}

impl CatalanTriangle {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[u64] {
        &self.rows[j]
    }

    pub fn get(&self, j: usize, i: usize) -> u64 {
        self.rows[j][i]
    }
}

impl fmt::Display for CatalanTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Rows `0..=j_max`: each starts at 1, grows by `τ^j_i = τ^{j-1}_i + τ^j_{i-1}`
/// and ends by repeating its previous entry.
pub fn catalan_triangle(j_max: usize) -> CatalanTriangle {
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for j in 1..=j_max {
        let prev = &rows[j - 1];
        let mut row = vec![1u64];
        for i in 1..j {
            row.push(prev[i] + row[i - 1]);
        }
        row.push(row[j - 1]);
        rows.push(row);
    }
    CatalanTriangle { rows }
}

/// Node counts of `T` per level, root at level 0, by explicit enumeration.
pub fn level_counts(depth: usize) -> Vec<usize> {
    tree_levels(depth).iter().map(Vec::len).collect()
}

/// How many vertices of `R_k` have each second δ-symbol `0..k-1`.
pub fn second_symbol_counts(k: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0usize; k.max(1)];
    for node in rk_nodes_in_order(k)? {
        if let Some(j) = node.delta.symbols()[1].color() {
            counts[j as usize] += 1;
        }
    }
    Ok(counts)
}

/// The paths of `T` restricted to `V(R_k)`, left to right. Each path starts
/// at a node that is not the right child of another vertex of `R_k` and
/// follows right children.
pub fn tk_components(k: usize) -> Result<Vec<Vec<DeltaString>>> {
    check_capacity(k, MAX_K)?;
    let nodes: Vec<TreeNode> = rk_nodes_in_order(k)?;
    let mut is_right_child = std::collections::HashSet::new();
    for n in &nodes {
        if let Some(r) = right_child(&n.delta)? {
            is_right_child.insert(r);
        }
    }
    let mut paths = Vec::new();
    for n in nodes.iter().filter(|n| !is_right_child.contains(&n.delta)) {
        let mut path = vec![n.delta.clone()];
        while let Some(r) = right_child(path.last().unwrap())? {
            path.push(r);
        }
        paths.push(path);
    }
    Ok(paths)
}

/// `S_1` lists component lengths; each later sequence sums the maximal
/// strictly decreasing runs of the one before, down to a single term.
pub fn s_sequences(k: usize) -> Result<Vec<Vec<usize>>> {
    let first: Vec<usize> = tk_components(k)?.iter().map(Vec::len).collect();
    let mut seqs = vec![first];
    while seqs.last().unwrap().len() > 1 {
        let cur = seqs.last().unwrap();
        let mut next = Vec::new();
        let mut run = cur[0];
        for w in cur.windows(2) {
            if w[1] < w[0] {
                run += w[1];
            } else {
                next.push(run);
                run = w[1];
            }
        }
        next.push(run);
        seqs.push(next);
    }
    Ok(seqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{binomial, catalan};

    #[test]
    fn triangle_rows() {
        let t = catalan_triangle(7);
        assert_eq!(t.row(5), [1, 5, 14, 28, 42, 42]);
        assert_eq!(t.row(7), [1, 7, 27, 75, 165, 297, 429, 429]);
    }

    #[test]
    fn triangle_properties() {
        let t = catalan_triangle(12);
        for j in 1..=12 {
            assert_eq!(t.get(j, 0), 1);
            assert_eq!(t.get(j, 1), j as u64);
            assert_eq!(t.get(j, j), t.get(j, j - 1));
        }
        for j in 2..12 {
            let sum: u64 = t.row(j).iter().sum();
            assert_eq!(sum, t.get(j + 1, j + 1));
            assert_eq!(t.get(j, j), catalan(j) as u64);
        }
    }

    #[test]
    fn level_counts_follow_binomials() {
        let counts = level_counts(12);
        assert_eq!(counts[0], 1);
        assert_eq!(&counts[1..5], [1, 2, 3, 6]);
        for (j, &c) in counts.iter().enumerate().skip(1) {
            let k = (j - 1) / 2;
            let expected = if j % 2 == 1 { binomial(2 * k + 1, k) } else { 2 * binomial(2 * k + 1, k) };
            assert_eq!(c, expected, "level {j}");
        }
    }

    #[test]
    fn second_symbols_follow_triangle() {
        let t = catalan_triangle(8);
        assert_eq!(second_symbol_counts(4).unwrap(), [1, 3, 5, 5]);
        for k in 2..=8 {
            let counts: Vec<u64> = second_symbol_counts(k).unwrap().iter().map(|&c| c as u64).collect();
            assert_eq!(counts, t.row(k - 1));
        }
    }

    #[test]
    fn s_sequences_small() {
        assert_eq!(s_sequences(2).unwrap(), vec![vec![2]]);
        assert_eq!(s_sequences(3).unwrap(), vec![vec![3, 2], vec![5]]);
        assert_eq!(s_sequences(4).unwrap(), vec![vec![4, 3, 2, 3, 2], vec![9, 5], vec![14]]);
        let s5 = s_sequences(5).unwrap();
        assert_eq!(s5[0], [5, 4, 3, 2, 4, 3, 2, 3, 2, 4, 3, 2, 3, 2]);
        assert_eq!(s5[1], [14, 9, 5, 9, 5]);
        assert_eq!(s5[2], [28, 14]);
        assert_eq!(s5[3], [42]);
        for k in 2..=8 {
            let s = s_sequences(k).unwrap();
            assert_eq!(s.len(), k - 1);
            assert_eq!(s.last().unwrap(), &vec![catalan(k)]);
        }
    }

    #[test]
    fn components_for_k3() {
        let paths = tk_components(3).unwrap();
        let names: Vec<Vec<String>> = paths
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect())
            .collect();
        assert_eq!(names[0], ["30*1*2*", "31*20**", "320*1**"]);
        assert_eq!(names[1], ["310**2*", "3210***"]);
    }
}
