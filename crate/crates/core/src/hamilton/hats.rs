use std::fmt;
use std::str::FromStr;

use super::{delta_of, phi_one, phi_zero, vertex_of, walk, RkPath};
use crate::error::{Error, Result};
use crate::lexical::{DeltaString, LexColor, Symbol};
use crate::quotient::ReducedGraph;
use crate::words::Necklace;

pub const KNOWN_HATS_K2: &str = "1";
pub const KNOWN_HATS_K3: &str = "1301";
pub const KNOWN_HATS_K4: &str = "1241201234032";
pub const KNOWN_HATS_K5: [&str; 2] = [
    "15152031515052323425153545251501313531353",
    "40403524040503232130402010304054242024202",
];

/// A cyclic hat sequence for `R_6`, printed over three lines.
pub const KNOWN_K6_CYCLE_LINES: [&str; 3] = [
    "5346410301615303202314304323602520101042531",
    "53020101340341064340504012652536031501040520",
    "412340615016560510502320616135342030636304521",
];

/// Removal positions listed alongside the `R_6` cycle; position `i` is the
/// edge between the `(i-1)`-th and `i`-th vertices of the decoded cycle.
pub const KNOWN_K6_REMOVALS: [usize; 24] = [
    1, 28, 41, 42, 43, 44, 45, 60, 62, 100, 101, 107, 108, 96, 104, 105, 114, 122, 127, 128, 129,
    130, 131, 132,
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HatSequence(pub Vec<u8>);

impl HatSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for HatSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(36)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidSequence(s.to_string(), "hats are digits"))
            })
            .collect::<Result<Vec<_>>>()
            .map(HatSequence)
    }
}

impl fmt::Display for HatSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &h in &self.0 {
            write!(f, "{}", char::from_digit(h as u32, 36).unwrap_or('?'))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// The hat is the color of the next edge.
    A,
    /// The hat is a coordinate of the δ-canonical word; flip it, apply ℵ.
    B,
    /// The hat indexes the color symbols of δ(current), stars skipped.
    C,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::A, Strategy::B, Strategy::C];
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Strategy::A),
            "B" | "b" => Ok(Strategy::B),
            "C" | "c" => Ok(Strategy::C),
            _ => Err(Error::InvalidSequence(s.to_string(), "strategy is A, B or C")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HatOutcome {
    pub strategy: Strategy,
    pub start: DeltaString,
    pub path: std::result::Result<RkPath, Error>,
    pub hamilton: bool,
    pub end: Option<DeltaString>,
    pub endpoints_looped: bool,
}

impl HatOutcome {
    pub fn validates(&self) -> bool {
        self.hamilton && self.endpoints_looped
    }

    pub fn summary(&self) -> String {
        match &self.path {
            Err(e) => format!("strategy {}: from {} fails: {e}", self.strategy, self.start),
            Ok(p) => format!(
                "strategy {}: from {} visits {} vertices, ends at {}, hamilton={}, looped ends={}",
                self.strategy,
                self.start,
                p.vertices.len(),
                self.end.as_ref().map(|d| d.to_string()).unwrap_or_default(),
                self.hamilton,
                self.endpoints_looped
            ),
        }
    }
}

/// Translates one hat at vertex `v` into an edge color.
fn hat_color(r: &ReducedGraph, v: usize, hat: u8, strategy: Strategy, step: usize) -> Result<LexColor> {
    let d = delta_of(r, v);
    match strategy {
        Strategy::A => Ok(LexColor(hat)),
        Strategy::B => {
            let sym = d.symbols().get(hat as usize).copied();
            match sym {
                Some(Symbol::Color(c)) => {
                    let w = d.word()?;
                    let next = Necklace::of(&w.flip(hat as usize).aleph());
                    let e = r.slot(v, LexColor(c)).expect("full palette");
                    debug_assert_eq!(r.vertices()[r.edges()[e].other(v)].necklace, next);
                    Ok(LexColor(c))
                }
                _ => Err(Error::Walk {
                    step,
                    reason: "hat points at a one of the δ-canonical word",
                }),
            }
        }
        Strategy::C => d
            .color_symbols()
            .nth(hat as usize)
            .map(LexColor)
            .ok_or(Error::Walk {
                step,
                reason: "hat beyond the color symbols",
            }),
    }
}

fn hats_to_path(r: &ReducedGraph, start: usize, hats: &HatSequence, strategy: Strategy) -> Result<RkPath> {
    let mut cur = start;
    let mut colors = Vec::with_capacity(hats.len());
    for (step, &h) in hats.0.iter().enumerate() {
        let c = hat_color(r, cur, h, strategy, step)?;
        colors.push(c);
        let e = r.slot(cur, c).ok_or(Error::Walk {
            step,
            reason: "color outside the palette",
        })?;
        cur = r.edges()[e].other(cur);
    }
    walk(r, start, &colors, false)
}

pub fn decode_hats(r: &ReducedGraph, hats: &HatSequence, strategy: Strategy, start: &DeltaString) -> Result<HatOutcome> {
    let s = vertex_of(r, start)?;
    let path = hats_to_path(r, s, hats, strategy);
    let (hamilton, end, looped) = match &path {
        Ok(p) => (
            p.is_hamilton(r),
            Some(delta_of(r, p.end())),
            !r.loops_at(p.start()).is_empty() && !r.loops_at(p.end()).is_empty(),
        ),
        Err(_) => (false, None, false),
    };
    Ok(HatOutcome {
        strategy,
        start: start.clone(),
        path,
        hamilton,
        end,
        endpoints_looped: looped,
    })
}

/// Every strategy from both distinguished starts `Φ(0…0)` and `Φ(01…)`.
pub fn decode_hats_all(r: &ReducedGraph, hats: &HatSequence, strategies: &[Strategy]) -> Vec<HatOutcome> {
    let k = r.k();
    let mut starts = vec![phi_zero(k), phi_one(k)];
    starts.dedup();
    let mut out = Vec::new();
    for &s in strategies {
        for start in &starts {
            out.push(decode_hats(r, hats, s, start).expect("distinguished starts are R_k vertices"));
        }
    }
    out
}

/// Decodes a closed hat sequence into the vertex list of a Hamilton cycle of
/// `R_k`; entry `i` is reached after `i` hats, and the last hat returns to the start.
pub fn decode_cycle(r: &ReducedGraph, start: &DeltaString, hats: &HatSequence, strategy: Strategy) -> Result<Vec<usize>> {
    let s = vertex_of(r, start)?;
    let m = hats.len();
    if m != r.vertex_count() {
        return Err(Error::InvalidSequence(hats.to_string(), "cycle needs one hat per vertex"));
    }
    let open = HatSequence(hats.0[..m - 1].to_vec());
    let path = hats_to_path(r, s, &open, strategy)?;
    let last = path.end();
    let c = hat_color(r, last, hats.0[m - 1], strategy, m - 1)?;
    let e = r.slot(last, c).ok_or(Error::Walk {
        step: m - 1,
        reason: "color outside the palette",
    })?;
    if r.edges()[e].other(last) != s || r.edges()[e].is_loop {
        return Err(Error::Walk {
            step: m - 1,
            reason: "the last hat does not close the cycle",
        });
    }
    Ok(path.vertices)
}
