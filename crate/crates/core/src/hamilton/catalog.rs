use std::collections::HashSet;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    decode_cycle, find_hamilton_path, lift_path, phi_one, phi_zero, signature::cycle_signature,
    signature_hash, verify_hamilton, vertex_of, walk, HatSequence, MkCycle, MkLift, NeighborOrder,
    RkPath, SearchOptions, Strategy, KNOWN_K6_CYCLE_LINES, KNOWN_K6_REMOVALS,
};
use crate::error::Result;
use crate::lexical::LexColor;
use crate::quotient::{MiddleLevelsGraph, QuotientGraph, ReducedGraph};

/// Removal positions tried first: the ones that open the printed cycle at its
/// first line and at the distinguished vertices.
const START_LINE_VARIANTS: [usize; 5] = [1, 132, 44, 43, 88];

#[derive(Clone, Debug)]
pub struct CatalogOptions {
    pub target: usize,
    /// Scan every removal position after the listed ones.
    pub full_scan: bool,
    /// Budget for each search used to top up the catalog.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// How many search paths to draw when topping up.
    pub search_paths: usize,
    pub jobs: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions {
            target: 29,
            full_scan: true,
            node_budget: Some(5_000_000),
            time_budget: None,
            search_paths: 64,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    HatRemoval {
        position: usize,
        start_loop: u8,
        end_loop: u8,
    },
    Search {
        index: usize,
        start_loop: u8,
        end_loop: u8,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub entry: usize,
    pub source: Source,
    pub verified: bool,
    pub length: usize,
    #[serde(rename = "signature-hash")]
    pub signature_hash: String,
    pub translation: usize,
    pub note: String,
    #[serde(skip)]
    pub signature: String,
    #[serde(skip)]
    pub cycle: MkCycle,
}

/// What became of one removal position or search path.
#[derive(Clone, Debug, Serialize)]
pub struct RecipeReport {
    pub source: String,
    pub outcome: String,
    pub accepted: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub report: Vec<RecipeReport>,
    /// Set when the printed hat cycle failed to decode and only search was used.
    pub fallback: Option<String>,
    pub search_nodes: u64,
    pub truncated: bool,
}

impl Catalog {
    pub fn verified_count(&self) -> usize {
        self.entries.iter().filter(|e| e.verified).count()
    }

    pub fn signatures_distinct(&self) -> bool {
        let mut seen = HashSet::new();
        self.entries.iter().all(|e| seen.insert(&e.signature))
    }

    pub fn manifest_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("entries serialize")
    }
}

struct Ctx<'a> {
    q: &'a QuotientGraph,
    r: &'a ReducedGraph,
    g: &'a MiddleLevelsGraph,
}

/// Every loop choice for a path, each lifted and checked in `M_k`.
fn lift_all(ctx: &Ctx, p: &RkPath) -> Vec<(LexColor, LexColor, std::result::Result<MkLift, String>)> {
    let starts = ctx.r.loops_at(p.start());
    let ends = ctx.r.loops_at(p.end());
    let mut out = Vec::new();
    for &el in &ends {
        for &sl in starts.iter().rev() {
            let mut looped = p.clone();
            looped.start_loop = ctx.r.slot(p.start(), sl);
            looped.end_loop = ctx.r.slot(p.end(), el);
            let res = match lift_path(ctx.q, ctx.r, &looped) {
                Ok(l) => verify_hamilton(ctx.g, &l.cycle).map(|_| l).map_err(|v| v.to_string()),
                Err(fails) => Err(fails
                    .last()
                    .map(|(_, _, e)| e.to_string())
                    .unwrap_or_default()),
            };
            out.push((sl, el, res));
        }
    }
    out
}

fn removal_path(r: &ReducedGraph, vs: &[usize], colors: &[LexColor], i: usize) -> Result<RkPath> {
    let m = vs.len();
    let path_colors: Vec<LexColor> = (0..m - 1).map(|j| colors[(i + j) % m]).collect();
    walk(r, vs[i % m], &path_colors, false)
}

impl Catalog {
    fn admit(&mut self, seen: &mut HashSet<String>, source: Source, lift: MkLift, note: &str) -> bool {
        let signature = cycle_signature(&lift.cycle);
        if !seen.insert(signature.clone()) {
            return false;
        }
        self.entries.push(CatalogEntry {
            entry: self.entries.len() + 1,
            source,
            verified: true,
            length: lift.cycle.len(),
            signature_hash: signature_hash(&signature),
            translation: lift.translation,
            note: note.to_string(),
            signature,
            cycle: lift.cycle,
        });
        true
    }

    fn absorb(
        &mut self,
        seen: &mut HashSet<String>,
        label: String,
        lifts: Vec<(LexColor, LexColor, std::result::Result<MkLift, String>)>,
        source: impl Fn(u8, u8) -> Source,
        note: &str,
        target: usize,
    ) {
        let mut outcomes = Vec::new();
        let mut accepted = 0;
        for (sl, el, res) in lifts {
            let tag = format!("loops {}/{}", sl.0, el.0);
            match res {
                Err(e) => outcomes.push(format!("{tag}: {e}")),
                Ok(_) if self.entries.len() >= target => outcomes.push(format!("{tag}: not needed")),
                Ok(l) => {
                    if self.admit(seen, source(sl.0, el.0), l, note) {
                        accepted += 1;
                        outcomes.push(format!("{tag}: verified"));
                    } else {
                        outcomes.push(format!("{tag}: duplicate signature"));
                    }
                }
            }
        }
        self.report.push(RecipeReport {
            source: label,
            outcome: outcomes.join("; "),
            accepted,
        });
    }
}

/// Hamilton cycles of `M_6`, first from removals in the printed `R_6` hat
/// cycle, then from search paths `Φ(0…0) → Φ(01…)` until `target` is reached.
/// Accepted entries are verified and carry pairwise distinct signatures.
pub fn k6_catalog(opts: &CatalogOptions) -> Result<Catalog> {
    let q = QuotientGraph::build(6)?;
    let r = ReducedGraph::from_quotient(&q)?;
    let g = MiddleLevelsGraph::build(6)?;
    let ctx = Ctx { q: &q, r: &r, g: &g };
    let mut cat = Catalog::default();
    let mut seen = HashSet::new();

    let hats: HatSequence = KNOWN_K6_CYCLE_LINES.concat().parse()?;
    match decode_cycle(&r, &phi_one(6), &hats, Strategy::A) {
        Err(e) => cat.fallback = Some(format!("hat cycle did not decode: {e}; search only")),
        Ok(vs) => {
            let colors: Vec<LexColor> = hats.0.iter().map(|&h| LexColor(h)).collect();
            let mut order: Vec<usize> = START_LINE_VARIANTS.to_vec();
            order.extend(KNOWN_K6_REMOVALS);
            if opts.full_scan {
                order.extend(1..=vs.len());
            }
            let mut dedup = HashSet::new();
            order.retain(|i| dedup.insert(*i));

            let lifted: Vec<_> = order
                .par_iter()
                .map(|&i| {
                    let p = removal_path(&r, &vs, &colors, i);
                    let lifts = match &p {
                        Ok(p) => lift_all(&ctx, p),
                        Err(_) => Vec::new(),
                    };
                    (i, p, lifts)
                })
                .collect();
            for (i, p, lifts) in lifted {
                if cat.entries.len() >= opts.target {
                    break;
                }
                let label = format!("hat-removal {i}");
                if let Err(e) = p {
                    cat.report.push(RecipeReport {
                        source: label,
                        outcome: e.to_string(),
                        accepted: 0,
                    });
                    continue;
                }
                if lifts.is_empty() {
                    cat.report.push(RecipeReport {
                        source: label,
                        outcome: "an endpoint carries no loop".into(),
                        accepted: 0,
                    });
                    continue;
                }
                let source = |s, e| Source::HatRemoval {
                    position: i,
                    start_loop: s,
                    end_loop: e,
                };
                cat.absorb(&mut seen, label, lifts, source, "hat-cycle removal", opts.target);
            }
        }
    }

    if cat.entries.len() < opts.target {
        let s = vertex_of(&r, &phi_zero(6))?;
        let e = vertex_of(&r, &phi_one(6))?;
        let search = SearchOptions {
            order: NeighborOrder::Warnsdorff,
            require_terminal_loops: true,
            max_solutions: opts.search_paths,
            node_budget: opts.node_budget,
            time_budget: opts.time_budget,
            jobs: opts.jobs,
        };
        let found = find_hamilton_path(&r, s, e, &search);
        cat.search_nodes = found.nodes;
        cat.truncated = found.truncated;
        let lifted: Vec<_> = found.paths.par_iter().map(|p| lift_all(&ctx, p)).collect();
        for (index, lifts) in lifted.into_iter().enumerate() {
            if cat.entries.len() >= opts.target {
                break;
            }
            let source = |s, e| Source::Search {
                index,
                start_loop: s,
                end_loop: e,
            };
            cat.absorb(
                &mut seen,
                format!("search {index}"),
                lifts,
                source,
                "search-based synthesis, Warnsdorff order",
                opts.target,
            );
        }
    }
    Ok(cat)
}
