//! Extended triangle groups `Γ*(l0, l1, l∞)` and their finite actions.
//!
//! The group is generated by three reflections `r0, r1, r∞` subject to
//! `(r0 r1)^l∞ = (r∞ r0)^l1 = (r1 r∞)^l0 = 1`. Words are read left to right
//! as a right action: the word `r0 r1` sends a point `p` to `(p·r0)·r1`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{is_transitive, orbits, Permutation};

/// Exponent attached to a pair of reflections: a positive period or `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Period {
    Finite(u32),
    Infinite,
}

impl Period {
    /// File encoding: `0` stands for `∞`.
    pub fn from_code(code: u32) -> Self {
        if code == 0 {
            Period::Infinite
        } else {
            Period::Finite(code)
        }
    }

    pub fn code(self) -> u32 {
        match self {
            Period::Finite(l) => l,
            Period::Infinite => 0,
        }
    }

    /// Whether a product of the given order satisfies this period.
    pub fn admits(self, order: u64) -> bool {
        match self {
            Period::Finite(l) => order > 0 && u64::from(l) % order == 0,
            Period::Infinite => true,
        }
    }

    /// Whether a permutation satisfies `p^l = 1`.
    pub fn admits_perm(self, p: &Permutation) -> bool {
        match self {
            Period::Finite(l) => p.order_divides(u64::from(l)),
            Period::Infinite => true,
        }
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Period::Finite(l) => write!(f, "{l}"),
            Period::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleSignature {
    pub l0: Period,
    pub l1: Period,
    pub linf: Period,
}

impl TriangleSignature {
    pub fn new(l0: Period, l1: Period, linf: Period) -> Result<Self> {
        for l in [l0, l1, linf] {
            if l == Period::Finite(0) {
                return Err(Error::InvalidParameter(
                    "signature entries must be >= 1 or infinite".into(),
                ));
            }
        }
        Ok(TriangleSignature { l0, l1, linf })
    }

    /// `(∞, ∞, ∞)`: the free product of three groups of order 2.
    pub fn unconstrained() -> Self {
        TriangleSignature {
            l0: Period::Infinite,
            l1: Period::Infinite,
            linf: Period::Infinite,
        }
    }

    pub fn from_codes(codes: [u32; 3]) -> Self {
        TriangleSignature {
            l0: Period::from_code(codes[0]),
            l1: Period::from_code(codes[1]),
            linf: Period::from_code(codes[2]),
        }
    }

    pub fn codes(&self) -> [u32; 3] {
        [self.l0.code(), self.l1.code(), self.linf.code()]
    }
}

impl fmt::Display for TriangleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l0, self.l1, self.linf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinSignature {
    /// The extended modular group, identified with `Γ*(2, 3, ∞)`.
    ModularStar,
    /// `Γ*(2)`, identified with `Γ*(∞, ∞, ∞)`.
    Level2Star,
    /// `Γ*(2, m, n)`, the map group of type `(m, n)`.
    Map(Period, Period),
}

pub fn builtin_signature(name: BuiltinSignature) -> Result<TriangleSignature> {
    use Period::*;
    match name {
        BuiltinSignature::ModularStar => TriangleSignature::new(Finite(2), Finite(3), Infinite),
        BuiltinSignature::Level2Star => Ok(TriangleSignature::unconstrained()),
        BuiltinSignature::Map(m, n) => TriangleSignature::new(Finite(2), m, n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    R0,
    R1,
    RInf,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::R0, Letter::R1, Letter::RInf];

    pub fn symbol(self) -> char {
        match self {
            Letter::R0 => 'a',
            Letter::R1 => 'b',
            Letter::RInf => 'c',
        }
    }
}

/// A word in `r0, r1, r∞`; text form over `{a, b, c}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse word; every letter is an involution, so this is the reversal.
    pub fn inverse(&self) -> Self {
        GroupWord(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::R0),
                'b' => Ok(Letter::R1),
                'c' => Ok(Letter::RInf),
                other => Err(Error::Parse(format!(
                    "unknown letter {other:?} in word {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

/// Cancels adjacent equal letters until none remain.
pub fn reduce_word(w: &GroupWord) -> GroupWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    GroupWord(out)
}

/// Images of `r0, r1, r∞` in a permutation action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflectionAction {
    pub r0: Permutation,
    pub r1: Permutation,
    pub rinf: Permutation,
}

impl ReflectionAction {
    pub fn new(r0: Permutation, r1: Permutation, rinf: Permutation) -> Result<Self> {
        let n = r0.degree();
        for g in [&r1, &rinf] {
            if g.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: g.degree(),
                });
            }
        }
        Ok(ReflectionAction { r0, r1, rinf })
    }

    pub fn degree(&self) -> usize {
        self.r0.degree()
    }

    pub fn generator(&self, l: Letter) -> &Permutation {
        match l {
            Letter::R0 => &self.r0,
            Letter::R1 => &self.r1,
            Letter::RInf => &self.rinf,
        }
    }

    fn gens(&self) -> [&Permutation; 3] {
        [&self.r0, &self.r1, &self.rinf]
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(&self.gens(), self.degree()).expect("degrees checked at construction")
    }

    /// Point reached from `p` by reading `w` left to right.
    pub fn act(&self, p: usize, w: &GroupWord) -> usize {
        w.0.iter().fold(p, |q, &l| self.generator(l).apply(q))
    }
}

/// The permutation realising `w`: letters are applied in word order, so
/// `[R0, R1]` evaluates to `r1 ∘ r0`.
pub fn evaluate_word(w: &GroupWord, action: &ReflectionAction) -> Permutation {
    let n = action.degree();
    let images = (0..n).map(|p| action.act(p, w)).collect();
    Permutation::from_images(images).expect("composite of permutations")
}

/// Product of two generators as a permutation, `first` applied first.
fn product(action: &ReflectionAction, first: Letter, second: Letter) -> Permutation {
    action
        .generator(second)
        .compose_unchecked(action.generator(first))
}

/// The three constrained products, each with the period it must obey.
pub(crate) fn constrained_products(sig: &TriangleSignature) -> [(Letter, Letter, Period); 3] {
    [
        (Letter::R0, Letter::R1, sig.linf),
        (Letter::RInf, Letter::R0, sig.l1),
        (Letter::R1, Letter::RInf, sig.l0),
    ]
}

pub fn check_signature(action: &ReflectionAction, sig: &TriangleSignature) -> Result<bool> {
    for l in Letter::ALL {
        if !action.generator(l).is_involution() {
            return Err(Error::NotInvolution {
                name: format!("r{}", l.symbol()),
            });
        }
    }
    Ok(constrained_products(sig)
        .iter()
        .all(|&(a, b, period)| period.admits_perm(&product(action, a, b))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierData {
    pub basepoint: usize,
    /// `representatives[p]` carries the basepoint to `p`.
    pub representatives: Vec<GroupWord>,
    /// Generators of the stabiliser of the basepoint.
    pub stabilizer_generators: Vec<GroupWord>,
}

/// Breadth-first Schreier tree rooted at `basepoint` (0-based) with the
/// Schreier generators of its stabiliser.
pub fn schreier_data(action: &ReflectionAction, basepoint: usize) -> Result<SchreierData> {
    let n = action.degree();
    if basepoint >= n {
        return Err(Error::InvalidParameter(format!(
            "basepoint {} out of range 1..={n}",
            basepoint + 1
        )));
    }
    let part = orbits(&action.gens(), n)?;
    if part.len() != 1 {
        return Err(Error::NotTransitive { orbits: part.len() });
    }

    let mut reps: Vec<Option<GroupWord>> = vec![None; n];
    // (parent, letter) of each tree edge, to skip the trivial generators.
    let mut tree_edge: Vec<Option<(usize, Letter)>> = vec![None; n];
    reps[basepoint] = Some(GroupWord::empty());
    let mut queue = VecDeque::from([basepoint]);
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for l in Letter::ALL {
            let v = action.generator(l).apply(u);
            if reps[v].is_none() {
                let mut w = reps[u].clone().expect("visited");
                w.0.push(l);
                reps[v] = Some(w);
                tree_edge[v] = Some((u, l));
                queue.push_back(v);
            }
        }
    }
    let representatives: Vec<GroupWord> =
        reps.into_iter().map(|w| w.expect("transitive")).collect();

    let mut seen = HashSet::new();
    let mut stabilizer_generators = Vec::new();
    for &u in &order {
        for l in Letter::ALL {
            let v = action.generator(l).apply(u);
            if tree_edge[v] == Some((u, l)) {
                continue;
            }
            let mut w = representatives[u].clone();
            w.0.push(l);
            w.0.extend(representatives[v].inverse().0);
            let w = reduce_word(&w);
            if !w.is_empty() && seen.insert(w.clone()) {
                stabilizer_generators.push(w);
            }
        }
    }
    Ok(SchreierData {
        basepoint,
        representatives,
        stabilizer_generators,
    })
}
