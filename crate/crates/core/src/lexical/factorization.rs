use rayon::prelude::*;
use thiserror::Error;

use super::{flip_color, lexical_color_upper, LexColor};
use crate::quotient::{MiddleLevelsGraph, QuotientGraph, ReducedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error("vertex {vertex} has {found} edges of color {color}")]
    Slot {
        vertex: String,
        color: u8,
        found: usize,
    },
    #[error("edge {edge}: lower end says color {lower}, upper end says {upper}")]
    Disagreement { edge: String, lower: u8, upper: u8 },
}

/// Edge ids grouped by color; class `c` is a perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneFactorization {
    pub classes: Vec<Vec<usize>>,
}

/// Color of an `M_k` edge read from both endpoints.
pub fn mk_edge_color(g: &MiddleLevelsGraph, e: usize) -> Result<LexColor, FactorizationError> {
    let edge = g.edges()[e];
    let lower = g.vertex(edge.lower);
    let upper = g.vertex(edge.upper);
    let n = lower.len() as i64;
    let from_lower = flip_color(&lower, edge.position).expect("valid M_k edge");
    let from_upper =
        lexical_color_upper(&upper.rotate(n - 1 - edge.position as i64)).expect("valid M_k edge");
    if from_lower != from_upper {
        return Err(FactorizationError::Disagreement {
            edge: format!("{lower}–{upper}"),
            lower: from_lower.0,
            upper: from_upper.0,
        });
    }
    Ok(from_lower)
}

fn check_slots(
    vertex: impl FnOnce() -> String,
    k: usize,
    colors: impl IntoIterator<Item = LexColor>,
) -> Result<(), FactorizationError> {
    let mut seen = vec![0usize; k + 1];
    for c in colors {
        match seen.get_mut(c.value()) {
            Some(s) => *s += 1,
            None => {
                return Err(FactorizationError::Slot {
                    vertex: vertex(),
                    color: c.0,
                    found: 1,
                })
            }
        }
    }
    match seen.iter().position(|&s| s != 1) {
        Some(c) => Err(FactorizationError::Slot {
            vertex: vertex(),
            color: c as u8,
            found: seen[c],
        }),
        None => Ok(()),
    }
}

fn classes(k: usize, colors: impl Iterator<Item = LexColor>) -> OneFactorization {
    let mut classes = vec![Vec::new(); k + 1];
    for (e, c) in colors.enumerate() {
        classes[c.value()].push(e);
    }
    OneFactorization { classes }
}

pub fn one_factorization_mk(g: &MiddleLevelsGraph) -> Result<OneFactorization, FactorizationError> {
    let k = g.k();
    let colors: Vec<LexColor> = (0..g.edge_count())
        .into_par_iter()
        .map(|e| mk_edge_color(g, e))
        .collect::<Result<_, _>>()?;
    let first_bad = (0..g.vertex_count()).into_par_iter().find_map_first(|v| {
        check_slots(
            || g.vertex(v).to_string(),
            k,
            g.incident(v).iter().map(|&e| colors[e]),
        )
        .err()
    });
    match first_bad {
        Some(err) => Err(err),
        None => Ok(classes(k, colors.into_iter())),
    }
}

pub fn one_factorization_quotient(q: &QuotientGraph) -> Result<OneFactorization, FactorizationError> {
    let k = q.k();
    let color = |e: usize| q.edges()[e].color;
    for (i, c) in q.lower().iter().enumerate() {
        check_slots(|| c.to_string(), k, q.lower_edges(i).iter().map(|&e| color(e)))?;
    }
    for (i, c) in q.upper().iter().enumerate() {
        check_slots(|| c.to_string(), k, q.upper_edges(i).iter().map(|&e| color(e)))?;
    }
    Ok(classes(k, q.edges().iter().map(|e| e.color)))
}

/// Loops fill one slot at their vertex; proper edges one slot at each end,
/// and both quotient edges of the pair must carry the edge's color.
pub fn one_factorization_reduced(
    q: &QuotientGraph,
    r: &ReducedGraph,
) -> Result<OneFactorization, FactorizationError> {
    let k = r.k();
    let mut at: Vec<Vec<LexColor>> = vec![Vec::new(); r.vertex_count()];
    for edge in r.edges() {
        for &lift in &edge.lifts {
            let c = q.edges()[lift].color;
            if c != edge.color {
                return Err(FactorizationError::Disagreement {
                    edge: q.describe(lift),
                    lower: edge.color.0,
                    upper: c.0,
                });
            }
        }
        at[edge.u].push(edge.color);
        if !edge.is_loop {
            at[edge.v].push(edge.color);
        }
    }
    for (v, colors) in at.into_iter().enumerate() {
        check_slots(|| format!("[{}]", r.vertices()[v].necklace), k, colors)?;
    }
    Ok(classes(k, r.edges().iter().map(|e| e.color)))
}
