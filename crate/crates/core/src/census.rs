//! Exhaustive enumeration of blade systems up to isomorphism.
//!
//! Systems are generated directly in canonical form. A transition table is
//! filled in scan order (blade 0: `τ, λ, ρ`, then blade 1, …), each open slot
//! receiving either an already numbered blade with a free slot, the blade
//! itself (a fixed point) or the next unused number. Every table built this
//! way is breadth-first from blade 0; a table is kept only when no other base
//! blade yields a smaller breadth-first table. Partial tables are compared
//! the same way as far as they are determined, which prunes whole subtrees.
//!
//! Filters that can be decided locally (no fixed blades, a 2-colouring, the
//! finite signature periods) are pushed into the search; the rest are checked
//! on complete systems.

use std::collections::VecDeque;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::blade::{BladeSystem, Passport, SurfaceType};
use crate::error::{Error, Result};
use crate::perm::table_to_perms;
use crate::triangle::{Period, TriangleSignature};

pub const DEFAULT_CAP: usize = 10;

const UNDEF: u32 = u32::MAX;
const TAU: usize = 0;
const LAMBDA: usize = 1;
const RHO: usize = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusFilters {
    pub orientable: Option<bool>,
    pub boundary: Option<RangeInclusive<usize>>,
    pub genus_or_crosscaps: Option<usize>,
    pub euler: Option<i64>,
}

impl CensusFilters {
    pub fn accepts(&self, s: &SurfaceType) -> bool {
        self.orientable.is_none_or(|o| o == s.orientable)
            && self
                .boundary
                .as_ref()
                .is_none_or(|r| r.contains(&s.boundary))
            && self
                .genus_or_crosscaps
                .is_none_or(|g| g == s.genus_or_crosscaps)
            && self.euler.is_none_or(|e| e == s.euler)
    }

    fn forbids_fixed_points(&self) -> bool {
        self.boundary.as_ref().is_some_and(|r| *r.end() == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusQuery {
    pub max_blades: usize,
    pub signature: TriangleSignature,
    pub filters: CensusFilters,
    pub cap: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl CensusQuery {
    pub fn new(max_blades: usize, signature: TriangleSignature) -> Self {
        CensusQuery {
            max_blades,
            signature,
            filters: CensusFilters::default(),
            cap: DEFAULT_CAP,
            threads: None,
        }
    }

    pub fn with_filters(mut self, filters: CensusFilters) -> Self {
        self.filters = filters;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_blades == 0 {
            return Err(Error::InvalidParameter(
                "max_blades must be at least 1".into(),
            ));
        }
        if self.max_blades > self.cap {
            return Err(Error::CapExceeded {
                requested: self.max_blades,
                cap: self.cap,
            });
        }
        if let Some(r) = &self.filters.boundary {
            if r.start() > r.end() {
                return Err(Error::InvalidParameter(format!(
                    "empty boundary range {}..={}",
                    r.start(),
                    r.end()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub system: BladeSystem,
    pub surface: SurfaceType,
    pub passport: Passport,
    pub map_type: (u64, u64),
}

impl CensusRecord {
    fn from_system(system: BladeSystem) -> Result<Self> {
        Ok(CensusRecord {
            surface: system.classify()?,
            passport: system.passport(),
            map_type: system.map_type(),
            system,
        })
    }
}

/// Records of every size `1..=max_blades`, sorted by size then canonical table.
pub fn enumerate(q: &CensusQuery) -> Result<CensusStream> {
    q.validate()?;
    Ok(CensusStream {
        query: q.clone(),
        next_level: 1,
        buffer: VecDeque::new(),
    })
}

/// Lazily computes one blade count at a time.
pub struct CensusStream {
    query: CensusQuery,
    next_level: usize,
    buffer: VecDeque<CensusRecord>,
}

impl Iterator for CensusStream {
    type Item = Result<CensusRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        while self.buffer.is_empty() {
            if self.next_level > self.query.max_blades {
                return None;
            }
            let n = self.next_level;
            self.next_level += 1;
            match enumerate_level(&self.query, n) {
                Ok(records) => self.buffer.extend(records),
                Err(e) => return Some(Err(e)),
            }
        }
        self.buffer.pop_front().map(Ok)
    }
}

/// All records with exactly `n` blades, sorted by canonical table.
pub fn enumerate_level(q: &CensusQuery, n: usize) -> Result<Vec<CensusRecord>> {
    q.validate()?;
    if n == 0 || n > q.max_blades {
        return Ok(Vec::new());
    }
    let mut tables = run(q, n, |tasks| {
        tasks
            .into_par_iter()
            .map(|mut s| {
                let mut out = Vec::new();
                s.dfs(0, &mut |t: &[u32]| out.push(t.to_vec()));
                out
            })
            .flatten()
            .collect::<Vec<_>>()
    });
    tables.sort_unstable();
    let records = tables
        .into_par_iter()
        .map(|t| CensusRecord::from_system(system_from_table(&t, q.signature)))
        .collect::<Result<Vec<_>>>()?;
    Ok(records
        .into_iter()
        .filter(|r| q.filters.accepts(&r.surface))
        .collect())
}

/// Number of records `enumerate` would yield.
pub fn count(q: &CensusQuery) -> Result<u64> {
    q.validate()?;
    let mut total = 0;
    for n in 1..=q.max_blades {
        total += count_level(q, n)?;
    }
    Ok(total)
}

pub fn count_level(q: &CensusQuery, n: usize) -> Result<u64> {
    q.validate()?;
    if n == 0 || n > q.max_blades {
        return Ok(0);
    }
    let sig = q.signature;
    let filters = &q.filters;
    let counts = run(q, n, |tasks| {
        tasks
            .into_par_iter()
            .map(|mut s| {
                let mut c = 0u64;
                let mut failure = None;
                s.dfs(
                    0,
                    &mut |t: &[u32]| match system_from_table(t, sig).classify() {
                        Ok(surface) => c += u64::from(filters.accepts(&surface)),
                        Err(e) => failure = Some(e),
                    },
                );
                failure.map_or(Ok(c), Err)
            })
            .collect::<Vec<Result<u64>>>()
    });
    counts.into_iter().sum()
}

fn system_from_table(t: &[u32], sig: TriangleSignature) -> BladeSystem {
    let mut perms = table_to_perms(t, 3).into_iter();
    BladeSystem::from_parts_unchecked(
        perms.next().expect("tau"),
        perms.next().expect("lambda"),
        perms.next().expect("rho"),
        sig,
    )
}

/// Splits the search into independent subtrees and hands them to `work`,
/// inside the requested thread pool.
fn run<T: Send>(q: &CensusQuery, n: usize, work: impl FnOnce(Vec<Search>) -> T + Send) -> T {
    let root = Search::new(n, q.signature, &q.filters);
    let tasks = if root.infeasible() {
        Vec::new()
    } else {
        let split = if n >= 7 { 5 } else { 0 };
        let mut tasks = Vec::new();
        let mut r = root;
        r.split(split, &mut tasks);
        tasks
    };
    match q.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(|| work(tasks)),
        None => work(tasks),
    }
}

#[derive(Clone)]
struct Search {
    n: usize,
    table: Vec<u32>,
    colour: Vec<u8>,
    next: usize,
    /// `(g, h, bound)`: every cycle of `g ∘ h` must have length dividing `bound`.
    constraints: Vec<(usize, usize, u32)>,
    allow_fixed: bool,
    bipartite: bool,
    label: Vec<u32>,
    order: Vec<u32>,
}

impl Search {
    fn new(n: usize, sig: TriangleSignature, filters: &CensusFilters) -> Self {
        let constraints = [
            (TAU, LAMBDA, sig.l0),
            (TAU, RHO, sig.l1),
            (RHO, LAMBDA, sig.linf),
        ]
        .into_iter()
        .filter_map(|(g, h, p)| match p {
            Period::Finite(l) => Some((g, h, l)),
            Period::Infinite => None,
        })
        .collect();
        let colour = vec![0u8; n];
        Search {
            n,
            table: vec![UNDEF; 3 * n],
            colour,
            next: 1,
            constraints,
            allow_fixed: !filters.forbids_fixed_points(),
            bipartite: filters.orientable == Some(true),
            label: vec![UNDEF; n],
            order: vec![0; n],
        }
    }

    /// Orientable closed systems pair blades across two equal colour classes.
    fn infeasible(&self) -> bool {
        !self.allow_fixed && self.bipartite && self.n % 2 == 1
    }

    #[inline]
    fn get(&self, blade: usize, g: usize) -> u32 {
        self.table[3 * blade + g]
    }

    #[inline]
    fn set(&mut self, blade: usize, g: usize, v: u32) {
        self.table[3 * blade + g] = v;
    }

    fn first_open(&self, from: usize) -> Option<usize> {
        (from..3 * self.n).find(|&p| self.table[p] == UNDEF)
    }

    /// Candidate images for slot `(b, g)` in increasing order.
    fn candidates(&self, b: usize, g: usize) -> impl Iterator<Item = usize> + '_ {
        let fixed = self.allow_fixed.then_some(b);
        let existing = (b + 1..self.next).filter(move |&j| {
            self.get(j, g) == UNDEF && (!self.bipartite || self.colour[j] != self.colour[b])
        });
        let fresh = (self.next < self.n).then_some(self.next);
        fixed.into_iter().chain(existing).chain(fresh)
    }

    /// Applies `g(b) = j`. Returns whether a new label was opened.
    fn assign(&mut self, b: usize, g: usize, j: usize) -> bool {
        self.set(b, g, j as u32);
        self.set(j, g, b as u32);
        if j == self.next {
            self.colour[j] = self.colour[b] ^ 1;
            self.next += 1;
            true
        } else {
            false
        }
    }

    fn unassign(&mut self, b: usize, g: usize, j: usize, opened: bool) {
        self.set(b, g, UNDEF);
        self.set(j, g, UNDEF);
        if opened {
            self.next -= 1;
        }
    }

    /// Walks `g ∘ h` from `start` through defined slots; fails when a closed
    /// cycle or an open chain is incompatible with `bound`.
    fn chain_ok(&self, start: usize, g: usize, h: usize, bound: u32) -> bool {
        let mut x = start;
        let mut len = 0u32;
        loop {
            let y = self.get(x, h);
            if y == UNDEF {
                return true;
            }
            let z = self.get(y as usize, g);
            if z == UNDEF {
                return true;
            }
            x = z as usize;
            len += 1;
            if x == start {
                return bound.is_multiple_of(len);
            }
            if len >= bound {
                return false;
            }
        }
    }

    fn constraints_ok(&self, b: usize, g: usize, j: usize) -> bool {
        self.constraints.iter().all(|&(p, q, bound)| {
            (p != g && q != g) || (self.chain_ok(b, p, q, bound) && self.chain_ok(j, p, q, bound))
        })
    }

    /// Compares the breadth-first relabelling from `base` with the table
    /// itself as far as both are determined. `true` means the relabelling is
    /// already strictly smaller, so no completion is canonical.
    fn beaten_by(&mut self, base: usize) -> bool {
        for l in self.label.iter_mut() {
            *l = UNDEF;
        }
        self.label[base] = 0;
        self.order[0] = base as u32;
        let mut labelled = 1usize;
        for row in 0..self.n {
            if row >= labelled {
                return false;
            }
            let orig = self.order[row] as usize;
            for g in 0..3 {
                let mine = self.get(row, g);
                let image = self.get(orig, g);
                if mine == UNDEF || image == UNDEF {
                    return false;
                }
                let image = image as usize;
                let relabelled = if self.label[image] == UNDEF {
                    self.label[image] = labelled as u32;
                    self.order[labelled] = image as u32;
                    labelled += 1;
                    labelled as u32 - 1
                } else {
                    self.label[image]
                };
                if relabelled != mine {
                    return relabelled < mine;
                }
            }
        }
        false
    }

    fn canonical_so_far(&mut self) -> bool {
        (1..self.next).all(|base| !self.beaten_by(base))
    }

    fn leaf_ok(&self) -> bool {
        self.constraints
            .iter()
            .all(|&(g, h, bound)| (0..self.n).all(|b| self.chain_ok(b, g, h, bound)))
    }

    fn dfs(&mut self, from: usize, emit: &mut dyn FnMut(&[u32])) {
        let Some(pos) = self.first_open(from) else {
            if self.next == self.n && self.leaf_ok() && self.canonical_so_far() {
                emit(&self.table);
            }
            return;
        };
        let (b, g) = (pos / 3, pos % 3);
        if b >= self.next {
            return;
        }
        let choices: Vec<usize> = self.candidates(b, g).collect();
        for j in choices {
            let opened = self.assign(b, g, j);
            if self.constraints_ok(b, g, j) && self.canonical_so_far() {
                self.dfs(pos + 1, emit);
            }
            self.unassign(b, g, j, opened);
        }
    }

    /// Expands the first `depth` choice levels and collects the subtrees.
    fn split(&mut self, depth: usize, out: &mut Vec<Search>) {
        self.split_from(0, depth, out);
    }

    fn split_from(&mut self, from: usize, depth: usize, out: &mut Vec<Search>) {
        if depth == 0 {
            out.push(self.clone());
            return;
        }
        let Some(pos) = self.first_open(from) else {
            out.push(self.clone());
            return;
        };
        let (b, g) = (pos / 3, pos % 3);
        if b >= self.next {
            return;
        }
        let choices: Vec<usize> = self.candidates(b, g).collect();
        for j in choices {
            let opened = self.assign(b, g, j);
            if self.constraints_ok(b, g, j) && self.canonical_so_far() {
                self.split_from(pos + 1, depth - 1, out);
            }
            self.unassign(b, g, j, opened);
        }
    }
}
