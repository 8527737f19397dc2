//! Built-in golden checks, grouped by area.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::time::Instant;

use midlevels::hamilton::{
    decode_cycle, decode_hats, delta_of, find_hamilton_path, k6_catalog, lift_path, phi_one, phi_zero,
    verify_hamilton, vertex_of, CatalogOptions, HatSequence, NeighborOrder, SearchOptions, Strategy,
    KNOWN_HATS_K2, KNOWN_HATS_K3, KNOWN_HATS_K4, KNOWN_HATS_K5, KNOWN_K6_CYCLE_LINES,
};
use midlevels::lexical::{
    adjacency_table, delta, lexical_color, one_factorization_mk, one_factorization_quotient,
    one_factorization_reduced,
};
use midlevels::quotient::{catalan, feasible_substrings, MiddleLevelsGraph, QuotientGraph, ReducedGraph};
use midlevels::tree::{catalan_triangle, phi, s_sequences, tree_levels, ASeq};
use midlevels::words::{necklaces, BinaryWord, Necklace};

pub struct Check {
    pub area: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn check(&mut self, area: &'static str, name: &'static str, f: impl FnOnce() -> Result<(), String>) {
        let started = Instant::now();
        let outcome = f();
        let ms = started.elapsed().as_millis();
        let (passed, detail) = match outcome {
            Ok(()) => (true, format!("{ms} ms")),
            Err(e) => (false, e),
        };
        self.checks.push(Check {
            area,
            name,
            passed,
            detail,
        });
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut areas: Vec<&str> = Vec::new();
        for c in &self.checks {
            if !areas.contains(&c.area) {
                areas.push(c.area);
            }
        }
        for area in areas {
            let group: Vec<&Check> = self.checks.iter().filter(|c| c.area == area).collect();
            let bad = group.iter().filter(|c| !c.passed).count();
            let _ = writeln!(out, "[{}] {area}: {}/{} passed", if bad == 0 { "PASS" } else { "FAIL" }, group.len() - bad, group.len());
            for c in group {
                let _ = writeln!(out, "  {} {} ({})", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
        }
        out
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn w(s: &str) -> BinaryWord {
    s.parse().expect("literal word")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const FEASIBLE: [(&str, usize); 19] = [
    ("", 5), ("0", 5), ("1", 3), ("00", 7), ("01", 7), ("10", 7), ("11", 7), ("000", 9), ("010", 11),
    ("101", 13), ("111", 15), ("0000", 11), ("0011", 15), ("0101", 15), ("0110", 17), ("1001", 13),
    ("1010", 15), ("1100", 15), ("1111", 19),
];

const K4_TABLE: [(&str, &str); 14] = [
    ("0000", "40*1*2*3*"), ("0001", "41*2*30**"), ("0002", "42*30*1**"), ("0003", "430*1*2**"),
    ("0011", "41*20**3*"), ("0012", "420**31**"), ("0013", "431*20***"), ("0022", "420*1**3*"),
    ("0023", "4320*1***"), ("0111", "410**2*3*"), ("0112", "42*310***"), ("0113", "4310**2**"),
    ("0122", "4210***3*"), ("0123", "43210****"),
];

const K2_CYCLE: [&str; 20] = [
    "00101", "00111", "00011", "01011", "01010", "01110", "00110", "10110", "10100", "11100", "01100",
    "01101", "01001", "11001", "11000", "11010", "10010", "10011", "10001", "10101",
];

pub fn run() -> Report {
    let mut r = Report::default();

    r.check("words", "aleph of 00011 is 00111", || expect(w("00011").aleph(), w("00111")));
    r.check("words", "every middle class has n members", || {
        for k in 1..=6 {
            for c in necklaces(2 * k + 1, k) {
                if c.members().collect::<BTreeSet<_>>().len() != 2 * k + 1 {
                    return Err(format!("{c}"));
                }
            }
        }
        Ok(())
    });

    r.check("quotient", "|V(R_k)| for k = 1..8", || {
        let got: Vec<usize> = (1..=8).map(|k| ReducedGraph::build(k).map(|g| g.vertex_count())).collect::<Result<_, _>>().map_err(err)?;
        expect(got, vec![1, 2, 5, 14, 42, 132, 429, 1430])
    });
    r.check("quotient", "R_k carries 2^k loops for k = 2..8", || {
        for k in 2..=8 {
            expect(ReducedGraph::build(k).map_err(err)?.loop_count(), 1 << k)?;
        }
        Ok(())
    });
    r.check("quotient", "doubly looped vertices >= k, equal at k = 2, 3, 5, 7", || {
        let mut bad = Vec::new();
        for k in 2..=8 {
            let d = ReducedGraph::build(k).map_err(err)?.doubly_looped_count();
            if d < k || ([2, 3, 5, 7].contains(&k) && d != k) {
                bad.push(format!("k={k}: {d}"));
            }
        }
        if bad.is_empty() { Ok(()) } else { Err(bad.join(", ")) }
    });
    r.check("quotient", "R_3 vertices 1, 2, 5 are doubly looped", || {
        let t = adjacency_table(3).map_err(err)?;
        let g = ReducedGraph::build(3).map_err(err)?;
        let doubles: Vec<usize> = t
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| g.loops_at(vertex_of(&g, &n.delta).unwrap()).len() == 2)
            .map(|(i, _)| i + 1)
            .collect();
        expect(doubles, vec![1, 2, 5])
    });
    r.check("quotient", "skew mirror is a fixed-point-free involution, horizontal multiplicity <= 2", || {
        for k in 1..=6 {
            let q = QuotientGraph::build(k).map_err(err)?;
            for (e, edge) in q.edges().iter().enumerate() {
                if edge.kind == midlevels::EdgeKind::Skew {
                    let m = q.skew_mirror(e).map_err(err)?;
                    if m == e || q.skew_mirror(m).map_err(err)? != e {
                        return Err(format!("k={k} edge {e}"));
                    }
                }
            }
            if (0..q.lower().len()).any(|i| q.horizontal_multiplicity(i) > 2) {
                return Err(format!("k={k} multiplicity"));
            }
        }
        Ok(())
    });
    let table = feasible_substrings(19);
    r.check("quotient", "feasible substring table", || {
        let got: Vec<(String, usize)> = table.clone();
        let want: Vec<(String, usize)> = FEASIBLE.iter().map(|&(s, n)| (s.to_string(), n)).collect();
        expect(got, want)
    });
    r.check("quotient", "001 is not feasible up to n = 19", || {
        expect(table.iter().any(|(s, _)| s == "001"), false)
    });

    r.check("lexical", "six drawn colors in M_2", || {
        let got: Vec<usize> = ["00011", "00110", "01100", "00101", "01010", "01001"]
            .iter()
            .map(|s| lexical_color(&w(s)).map(|c| c.value()))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        expect(got, vec![2, 1, 0, 2, 0, 1])
    });
    r.check("lexical", "delta names of the R_2 vertices", || {
        let a = delta(&Necklace::of(&w("00011"))).map_err(err)?.to_string();
        let b = delta(&Necklace::of(&w("00101"))).map_err(err)?.to_string();
        expect((a.as_str(), b.as_str()), ("210**", "20*1*"))
    });
    r.check("lexical", "R_3 id matrix", || {
        expect(
            adjacency_table(3).map_err(err)?.matrix_csv(),
            "id,3,2,1,0\n1,1,3,4,1\n2,4,2,2,3\n3,3,1,5,2\n4,2,5,1,4\n5,5,4,3,5\n".to_string(),
        )
    });
    r.check("lexical", "1-factorization of M_k, M_k/π and R_k for k <= 5", || {
        for k in 1..=5 {
            let g = MiddleLevelsGraph::build(k).map_err(err)?;
            let f = one_factorization_mk(&g).map_err(err)?;
            expect(f.classes.len(), k + 1)?;
            let q = QuotientGraph::build(k).map_err(err)?;
            one_factorization_quotient(&q).map_err(err)?;
            let rk = ReducedGraph::from_quotient(&q).map_err(err)?;
            one_factorization_reduced(&q, &rk).map_err(err)?;
        }
        Ok(())
    });

    let levels = tree_levels(5);
    r.check("tree", "fifth level in δ notation", || {
        let got: BTreeSet<String> = levels[4].iter().map(|n| n.delta.to_string()).collect();
        let want: BTreeSet<String> = ["50*1*2*3*4*", "41*2*30**", "41*20**3*", "320*1**", "410**2*3*", "3210***"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        expect(got, want)
    });
    r.check("tree", "five levels in a and b notation", || {
        let a: BTreeSet<String> = levels.iter().flatten().map(|n| n.aseq.to_string()).collect();
        let b: BTreeSet<String> = levels.iter().flatten().map(|n| n.bseq.to_string()).collect();
        let set = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        expect(a, set(&["0", "00", "000", "0000", "00000", "0001", "0011", "002", "0111", "011", "001", "01", "012"]))?;
        expect(b, set(&["∅", "0", "00", "000", "0000", "001", "010", "02", "100", "10", "01", "1", "11"]))
    });
    r.check("tree", "a-sequences of length 4 and their δ names", || {
        for (a, d) in K4_TABLE {
            let seq = ASeq::new(a.bytes().map(|b| b - b'0').collect()).map_err(err)?;
            expect(phi(&seq).to_string(), d.to_string())?;
        }
        Ok(())
    });
    r.check("tree", "S-sequences for k = 4, 5", || {
        expect(s_sequences(4).map_err(err)?, vec![vec![4, 3, 2, 3, 2], vec![9, 5], vec![14]])?;
        expect(
            s_sequences(5).map_err(err)?,
            vec![vec![5, 4, 3, 2, 4, 3, 2, 3, 2, 4, 3, 2, 3, 2], vec![14, 9, 5, 9, 5], vec![28, 14], vec![42]],
        )
    });
    r.check("tree", "Catalan triangle through row 7", || {
        let t = catalan_triangle(7);
        expect(t.row(6).to_vec(), vec![1, 6, 20, 48, 90, 132, 132])?;
        expect(t.row(7).to_vec(), vec![1, 7, 27, 75, 165, 297, 429, 429])
    });
    r.check("tree", "C_k is odd exactly for k = 1, 3, 7", || {
        let odd: Vec<usize> = (1..=8).filter(|&k| catalan(k) % 2 == 1).collect();
        expect(odd, vec![1, 3, 7])
    });

    r.check("hamilton", "hat sequences for k = 2..5 decode under strategy A", || {
        let mut cases = vec![(2, KNOWN_HATS_K2), (3, KNOWN_HATS_K3), (4, KNOWN_HATS_K4)];
        cases.extend(KNOWN_HATS_K5.iter().map(|&h| (5, h)));
        for (k, h) in cases {
            let g = ReducedGraph::build(k).map_err(err)?;
            let hats: HatSequence = h.parse().map_err(err)?;
            let o = decode_hats(&g, &hats, Strategy::A, &phi_zero(k)).map_err(err)?;
            if !o.validates() {
                return Err(o.summary());
            }
        }
        Ok(())
    });
    r.check("hamilton", "the R_6 hat cycle closes", || {
        let g = ReducedGraph::build(6).map_err(err)?;
        let hats: HatSequence = KNOWN_K6_CYCLE_LINES.concat().parse().map_err(err)?;
        let vs = decode_cycle(&g, &phi_one(6), &hats, Strategy::A).map_err(err)?;
        expect(delta_of(&g, vs[43]), phi_zero(6))
    });
    r.check("hamilton", "k = 2 lift reproduces the drawn cycle", || {
        let (len, c) = lift_k(2)?;
        expect(len, 20)?;
        expect(c, K2_CYCLE.iter().map(|s| w(s)).collect::<Vec<_>>())
    });
    r.check("hamilton", "lifts for k = 3, 4, 5 are Hamilton cycles", || {
        for (k, n) in [(3, 70), (4, 252), (5, 924)] {
            expect(lift_k(k)?.0, n)?;
        }
        Ok(())
    });
    r.check("hamilton", "29 verified M_6 cycles with distinct signatures", || {
        let cat = k6_catalog(&CatalogOptions::default()).map_err(err)?;
        expect((cat.verified_count(), cat.signatures_distinct()), (29, true))?;
        if cat.entries.iter().any(|e| e.length != 3432) {
            return Err("wrong length".into());
        }
        Ok(())
    });
    r
}

fn lift_k(k: usize) -> Result<(usize, Vec<BinaryWord>), String> {
    let q = QuotientGraph::build(k).map_err(err)?;
    let g = ReducedGraph::from_quotient(&q).map_err(err)?;
    let s = vertex_of(&g, &phi_zero(k)).map_err(err)?;
    let e = vertex_of(&g, &phi_one(k)).map_err(err)?;
    let opts = SearchOptions {
        order: if k >= 6 { NeighborOrder::Warnsdorff } else { NeighborOrder::Color },
        ..SearchOptions::default()
    };
    let path = find_hamilton_path(&g, s, e, &opts).paths.into_iter().next().ok_or("no path")?;
    let lift = lift_path(&q, &g, &path).map_err(|f| format!("{} loop choices failed", f.len()))?;
    let m = MiddleLevelsGraph::build(k).map_err(err)?;
    verify_hamilton(&m, &lift.cycle).map_err(err)?;
    Ok((lift.cycle.len(), lift.cycle.vertices))
}
