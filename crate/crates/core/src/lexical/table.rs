use std::collections::HashMap;
use std::fmt::Write;

use super::{DeltaString, LexColor};
use crate::error::Result;
use crate::quotient::{check_capacity, ReducedGraph};
use crate::tree::{rk_nodes_in_order, TreeNode};
use crate::words::Necklace;

/// Adjacency of `R_k` in presentation order. `matrix[v][i]` is the 1-based
/// presentation id of the neighbor of vertex `v + 1` along color `k - i`.
#[derive(Clone, Debug)]
pub struct AdjacencyTable {
    pub k: usize,
    pub nodes: Vec<TreeNode>,
    pub matrix: Vec<Vec<usize>>,
}

pub fn adjacency_table(k: usize) -> Result<AdjacencyTable> {
    check_capacity(k, 6)?;
    let r = ReducedGraph::build(k)?;
    let nodes = rk_nodes_in_order(k)?;
    let order: HashMap<Necklace, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| Ok((n.delta.necklace()?, i)))
        .collect::<Result<_>>()?;
    let mut matrix = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let v = r.id_of(&node.delta.necklace()?).expect("tree node names an R_k vertex");
        let row = (0..=k)
            .rev()
            .map(|c| {
                let e = r.slot(v, LexColor(c as u8)).expect("every color is present");
                let w = r.edges()[e].other(v);
                order[&r.vertices()[w].necklace] + 1
            })
            .collect();
        matrix.push(row);
    }
    Ok(AdjacencyTable { k, nodes, matrix })
}

fn hatted(d: &DeltaString, color: u8) -> String {
    let mut s = String::new();
    for sym in d.reversed().symbols() {
        if sym.color() == Some(color) {
            s.push('^');
        }
        s.push_str(&DeltaString::from_symbols_unchecked(vec![*sym]).to_string());
    }
    s
}

impl AdjacencyTable {
    /// Header `id,k,..,0`, then one line per vertex.
    pub fn matrix_csv(&self) -> String {
        let mut out = String::from("id");
        for c in (0..=self.k).rev() {
            write!(out, ",{c}").unwrap();
        }
        out.push('\n');
        for (i, row) in self.matrix.iter().enumerate() {
            write!(out, "{}", i + 1).unwrap();
            for id in row {
                write!(out, ",{id}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Columns headed by δ(v); row `c` holds the reversed δ of the neighbor
    /// along color `c`, with `^` before that color, and the neighbor's id.
    pub fn text(&self) -> String {
        let width = self.nodes[0].delta.len() + 5;
        let mut out = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            let cell = format!("{} {}", n.delta, i + 1);
            write!(out, "{cell:<width$}").unwrap();
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        for (ci, c) in (0..=self.k).rev().enumerate() {
            let mut line = String::new();
            for row in &self.matrix {
                let w = row[ci];
                let cell = format!("{} {}", hatted(&self.nodes[w - 1].delta, c as u8), w);
                write!(line, "{cell:<width$}").unwrap();
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
