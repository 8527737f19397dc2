use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::RkPath;
use crate::quotient::ReducedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NeighborOrder {
    /// Ascending edge color.
    #[default]
    Color,
    /// Fewest free neighbors first, ties by color. Also cuts branches whose
    /// unvisited vertices are disconnected from the head.
    Warnsdorff,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub order: NeighborOrder,
    pub require_terminal_loops: bool,
    pub max_solutions: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Split the root frontier across this many workers. Results are merged
    /// in frontier order, so the answer does not depend on the count.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            order: NeighborOrder::Color,
            require_terminal_loops: true,
            max_solutions: 1,
            node_budget: None,
            time_budget: None,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    pub paths: Vec<RkPath>,
    pub nodes: u64,
    /// True when a budget stopped the search before it finished.
    pub truncated: bool,
}

struct Candidate {
    edge: usize,
    next: usize,
}

struct Searcher<'a> {
    end: usize,
    opts: &'a SearchOptions,
    /// Distinct proper neighbors per vertex.
    nbrs: Vec<Vec<usize>>,
    /// Proper edges per vertex, ascending color.
    cands: Vec<Vec<(u8, usize, usize)>>,
    visited: Vec<bool>,
    nodes: u64,
    truncated: bool,
    deadline: Option<Instant>,
}

impl<'a> Searcher<'a> {
    fn new(r: &'a ReducedGraph, end: usize, opts: &'a SearchOptions) -> Self {
        let n = r.vertex_count();
        let mut nbrs = vec![Vec::new(); n];
        let mut cands = vec![Vec::new(); n];
        for v in 0..n {
            for (c, e) in r.slots(v) {
                let edge = r.edges()[e];
                if edge.is_loop {
                    continue;
                }
                let u = edge.other(v);
                cands[v].push((c.0, e, u));
                if !nbrs[v].contains(&u) {
                    nbrs[v].push(u);
                }
            }
        }
        Searcher {
            end,
            opts,
            nbrs,
            cands,
            visited: vec![false; n],
            nodes: 0,
            truncated: false,
            deadline: opts.time_budget.map(|d| Instant::now() + d),
        }
    }

    fn free(&self, v: usize, head: usize) -> usize {
        self.nbrs[v]
            .iter()
            .filter(|&&u| !self.visited[u] || u == head)
            .count()
    }

    /// False when the branch at `head` cannot be completed.
    fn viable(&self, head: usize, remaining: usize) -> bool {
        let mut forced = 0;
        for v in 0..self.visited.len() {
            if self.visited[v] {
                continue;
            }
            match self.free(v, head) {
                0 => return false,
                1 if v != self.end => {
                    forced += 1;
                    if forced > 1 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        if self.opts.order == NeighborOrder::Warnsdorff {
            let mut seen = vec![false; self.visited.len()];
            let mut stack = vec![head];
            seen[head] = true;
            let mut reached = 0;
            while let Some(x) = stack.pop() {
                for &u in &self.nbrs[x] {
                    if !self.visited[u] && !seen[u] {
                        seen[u] = true;
                        reached += 1;
                        stack.push(u);
                    }
                }
            }
            if reached != remaining {
                return false;
            }
        }
        true
    }

    fn ordered(&self, head: usize) -> Vec<Candidate> {
        let mut list: Vec<(usize, u8, Candidate)> = self.cands[head]
            .iter()
            .filter(|&&(_, _, u)| !self.visited[u])
            .map(|&(c, e, u)| {
                let key = match self.opts.order {
                    NeighborOrder::Color => 0,
                    NeighborOrder::Warnsdorff => self.free(u, u),
                };
                (key, c, Candidate { edge: e, next: u })
            })
            .collect();
        list.sort_by_key(|&(key, c, _)| (key, c));
        list.into_iter().map(|(_, _, c)| c).collect()
    }

    fn out_of_budget(&mut self) -> bool {
        if self.opts.node_budget.is_some_and(|b| self.nodes >= b)
            || self.deadline.is_some_and(|d| self.nodes % 1024 == 0 && Instant::now() >= d)
        {
            self.truncated = true;
        }
        self.truncated
    }

    /// Iterative DFS from the given prefix.
    fn run(&mut self, prefix: RkPath, out: &mut Vec<RkPath>) {
        let total = self.visited.len();
        for &v in &prefix.vertices {
            self.visited[v] = true;
        }
        let mut path = prefix;
        let mut stack: Vec<(Vec<Candidate>, usize)> = Vec::new();
        let mut enter = true;
        loop {
            if enter {
                enter = false;
                self.nodes += 1;
                let head = path.end();
                if path.vertices.len() == total {
                    if head == self.end {
                        out.push(path.clone());
                    }
                    stack.push((Vec::new(), 0));
                } else if !self.viable(head, total - path.vertices.len()) {
                    stack.push((Vec::new(), 0));
                } else {
                    let list = self.ordered(head);
                    stack.push((list, 0));
                }
            }
            if out.len() >= self.opts.max_solutions || self.out_of_budget() {
                break;
            }
            let depth = path.vertices.len();
            let (list, idx) = stack.last_mut().expect("stack tracks the path");
            let mut advanced = false;
            while *idx < list.len() {
                let cand = &list[*idx];
                *idx += 1;
                if self.visited[cand.next] || (cand.next == self.end && depth + 1 < total) {
                    continue;
                }
                self.visited[cand.next] = true;
                path.vertices.push(cand.next);
                path.edges.push(cand.edge);
                advanced = true;
                break;
            }
            if advanced {
                enter = true;
                continue;
            }
            stack.pop();
            if stack.is_empty() {
                break;
            }
            let v = path.vertices.pop().unwrap();
            path.edges.pop();
            self.visited[v] = false;
        }
        self.visited.iter_mut().for_each(|x| *x = false);
    }
}

/// Hamilton paths of `R_k` from `start` to `end`, in deterministic order.
/// With `require_terminal_loops`, both ends must carry a loop, otherwise
/// nothing is searched.
pub fn find_hamilton_path(
    r: &ReducedGraph,
    start: usize,
    end: usize,
    opts: &SearchOptions,
) -> SearchOutcome {
    let mut outcome = SearchOutcome::default();
    if opts.require_terminal_loops && (r.loops_at(start).is_empty() || r.loops_at(end).is_empty()) {
        return outcome;
    }
    if r.vertex_count() == 1 {
        if start == end {
            outcome.paths.push(RkPath::single(start));
        }
        outcome.nodes = 1;
        return outcome;
    }
    if start == end || opts.max_solutions == 0 {
        return outcome;
    }

    if opts.jobs <= 1 {
        let mut s = Searcher::new(r, end, opts);
        s.run(RkPath::single(start), &mut outcome.paths);
        outcome.nodes = s.nodes;
        outcome.truncated = s.truncated;
        return outcome;
    }

    // One task per first edge, merged in the order a single worker would use.
    let root = Searcher::new(r, end, opts);
    let mut seed = root;
    seed.visited[start] = true;
    let firsts = seed.ordered(start);
    let branches: Vec<(u64, bool, Vec<RkPath>)> = firsts
        .par_iter()
        .map(|c| {
            let mut s = Searcher::new(r, end, opts);
            let mut prefix = RkPath::single(start);
            if c.next == end && r.vertex_count() > 2 {
                return (0, false, Vec::new());
            }
            prefix.vertices.push(c.next);
            prefix.edges.push(c.edge);
            let mut found = Vec::new();
            s.run(prefix, &mut found);
            (s.nodes, s.truncated, found)
        })
        .collect();
    outcome.nodes = 1;
    for (nodes, truncated, found) in branches {
        outcome.nodes += nodes;
        outcome.truncated |= truncated;
        for p in found {
            if outcome.paths.len() < opts.max_solutions {
                outcome.paths.push(p);
            }
        }
    }
    outcome
}
