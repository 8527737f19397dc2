use std::fmt::Write;

use midlevels::tree::{
    catalan_triangle, level_counts, second_symbol_counts, s_sequences, tk_components, ASeq, TreeNode,
};
use midlevels::Result;

use crate::Notation;

fn label(n: &TreeNode, notation: Notation) -> String {
    match notation {
        Notation::Delta => n.delta.to_string(),
        Notation::A => n.aseq.to_string(),
        Notation::B => n.bseq.to_string(),
    }
}

/// Pre-order listing, two spaces of indent per level, left child first.
pub fn tree_text(depth: usize, notation: Notation) -> String {
    fn visit(a: ASeq, level: usize, depth: usize, notation: Notation, out: &mut String) {
        if level >= depth {
            return;
        }
        let (l, r) = a.children();
        let node = TreeNode::from_aseq(a);
        let _ = writeln!(out, "{}{}", "  ".repeat(level), label(&node, notation));
        visit(l, level + 1, depth, notation, out);
        if let Some(r) = r {
            visit(r, level + 1, depth, notation, out);
        }
    }
    let mut out = String::new();
    visit(ASeq::new(vec![0]).expect("root"), 0, depth, notation, &mut out);
    out
}

/// `S_1` is grouped into its strictly decreasing runs; later sequences are
/// listed term by term. Sequences are separated by " / ".
pub fn s_line(seqs: &[Vec<usize>]) -> String {
    let mut parts = Vec::new();
    for (i, s) in seqs.iter().enumerate() {
        let join = |xs: &[usize], sep: &str| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
        if i > 0 {
            parts.push(join(s, "; "));
            continue;
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &x in s {
            match groups.last_mut() {
                Some(g) if x < *g.last().unwrap() => g.push(x),
                _ => groups.push(vec![x]),
            }
        }
        parts.push(groups.iter().map(|g| join(g, " ")).collect::<Vec<_>>().join("; "));
    }
    parts.join(" / ")
}

pub fn counts(k: usize) -> Result<String> {
    let mut out = String::new();
    let comps = tk_components(k)?;
    let depth = 2 * k + 1;
    let levels: Vec<String> = level_counts(depth).iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "levels 0..{}: {}", depth - 1, levels.join(" "));
    let seconds: Vec<String> = second_symbol_counts(k)?.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "second symbols 0..{}: {}", k.saturating_sub(1), seconds.join(" "));
    let _ = writeln!(out, "components: {}", comps.len());
    for c in &comps {
        let names: Vec<String> = c.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(out, "  {}", names.join(" "));
    }
    let _ = writeln!(out, "S: {}", s_line(&s_sequences(k)?));
    let t = catalan_triangle(k.max(7));
    let _ = writeln!(out, "triangle:");
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    Ok(out)
}
