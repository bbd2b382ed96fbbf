use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::gaussian::{Gaussian, Point};
use super::poly::Poly;
use super::scalar::{exact_sqrt, ExactInt};
use crate::error::{Error, Result};

/// Trial divisions allowed when searching for rational roots.
const ROOT_SEARCH_BUDGET: u64 = 1_000_000;

/// `N(x) / D(x)` with real rational coefficients, stored in lowest terms
/// with `D` monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMap<I: ExactInt> {
    num: Poly<I>,
    den: Poly<I>,
}

impl<I: ExactInt> RationalMap<I> {
    pub fn new(num: Poly<I>, den: Poly<I>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let k = Ratio::one() / den.lead();
        Ok(RationalMap {
            num: num.scale(&k),
            den: den.scale(&k),
        })
    }

    pub fn identity() -> Self {
        RationalMap {
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn polynomial(p: Poly<I>) -> Self {
        RationalMap {
            num: p,
            den: Poly::one(),
        }
    }

    /// `(a x + b) / (c x + d)`; errors when `ad − bc = 0`.
    pub fn moebius(a: Ratio<I>, b: Ratio<I>, c: Ratio<I>, d: Ratio<I>) -> Result<Self> {
        if (a.clone() * d.clone() - b.clone() * c.clone()).is_zero() {
            return Err(Error::InvalidParameter(
                "degenerate Möbius transformation".into(),
            ));
        }
        Self::new(Poly::new(vec![b, a]), Poly::new(vec![d, c]))
    }

    pub fn numerator(&self) -> &Poly<I> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<I> {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let d = self.degree();
        let num = self.num.homogeneous_compose(&inner.num, &inner.den, d);
        let den = self.den.homogeneous_compose(&inner.num, &inner.den, d);
        Self::new(num, den).expect("composition of non-constant maps has a denominator")
    }

    pub fn eval(&self, p: &Point<I>) -> Point<I> {
        match p {
            Point::Finite(z) => {
                let d = self.den.eval_gaussian(z);
                if d.is_zero() {
                    Point::Infinity
                } else {
                    Point::Finite(self.num.eval_gaussian(z) / d)
                }
            }
            Point::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree().expect("non-zero denominator");
                match dn {
                    None => Point::zero(),
                    Some(k) if k > dd => Point::Infinity,
                    Some(k) if k < dd => Point::zero(),
                    Some(_) => Point::real(self.num.lead() / self.den.lead()),
                }
            }
        }
    }

    /// `N′D − ND′`, whose roots are the finite critical points.
    pub fn wronskian(&self) -> Poly<I> {
        self.num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()))
    }

    /// Critical points, sorted, with `∞` last when present.
    pub fn critical_points(&self) -> Result<Vec<Point<I>>> {
        let d = self.degree();
        if d == 0 {
            return Err(Error::DegreeUnsupported {
                degree: 0,
                reason: "constant map".into(),
            });
        }
        let w = self.wronskian();
        let mut pts: Vec<Point<I>> = gaussian_roots(&w)
            .map_err(|reason| Error::DegreeUnsupported { degree: d, reason })?
            .into_iter()
            .map(Point::Finite)
            .collect();
        if w.degree().unwrap_or(0) < 2 * d - 2 {
            pts.push(Point::Infinity);
        }
        pts.sort();
        pts.dedup();
        Ok(pts)
    }

    /// Images of the critical points, sorted and without repeats.
    pub fn critical_values(&self) -> Result<Vec<Point<I>>> {
        let mut v: Vec<Point<I>> = self
            .critical_points()?
            .iter()
            .map(|p| self.eval(p))
            .collect();
        v.sort();
        v.dedup();
        Ok(v)
    }
}

impl<I: ExactInt> fmt::Display for RationalMap<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// `critical_values` as a free function.
pub fn critical_values<I: ExactInt>(h: &RationalMap<I>) -> Result<Vec<Point<I>>> {
    h.critical_values()
}

/// Distinct roots in `Q(i)` of a real polynomial, or a reason why they could
/// not all be found exactly.
fn gaussian_roots<I: ExactInt>(w: &Poly<I>) -> std::result::Result<Vec<Gaussian<I>>, String> {
    if w.is_zero() {
        return Err("derivative vanishes identically".into());
    }
    let mut f = w.div_rem(&w.gcd(&w.derivative())).0;
    let mut roots = Vec::new();
    while f.degree().unwrap_or(0) > 2 {
        match rational_root(&f)? {
            Some(r) => {
                f = f.div_rem(&Poly::linear_root(r.clone())).0;
                roots.push(Gaussian::real(r));
            }
            None => {
                return Err(format!(
                    "factor of degree {} without rational roots",
                    f.degree().unwrap_or(0)
                ))
            }
        }
    }
    roots.extend(low_degree_roots(&f)?);
    Ok(roots)
}

fn low_degree_roots<I: ExactInt>(f: &Poly<I>) -> std::result::Result<Vec<Gaussian<I>>, String> {
    match f.degree() {
        None | Some(0) => Ok(Vec::new()),
        Some(1) => Ok(vec![Gaussian::real(-f.coeff(0) / f.coeff(1))]),
        Some(2) => {
            let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
            let two_a = a.clone() + a.clone();
            let four = Ratio::from_integer(I::one() + I::one() + I::one() + I::one());
            let disc = b.clone() * b.clone() - four * a * c;
            let centre = -b / two_a.clone();
            if disc.is_negative() {
                let s = exact_sqrt(&-disc).ok_or("irrational complex roots")?;
                let off = s / two_a;
                Ok(vec![
                    Gaussian::new(centre.clone(), off.clone()),
                    Gaussian::new(centre, -off),
                ])
            } else {
                let s = exact_sqrt(&disc).ok_or("irrational real roots")?;
                let off = s / two_a;
                Ok(vec![
                    Gaussian::real(centre.clone() + off.clone()),
                    Gaussian::real(centre - off),
                ])
            }
        }
        Some(_) => unreachable!("callers reduce to degree two"),
    }
}

/// A rational root of `f`, by the rational root theorem.
fn rational_root<I: ExactInt>(f: &Poly<I>) -> std::result::Result<Option<Ratio<I>>, String> {
    if f.coeff(0).is_zero() {
        return Ok(Some(Ratio::zero()));
    }
    let lcm = f.coeffs().iter().fold(I::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let ints: Vec<I> = f
        .coeffs()
        .iter()
        .map(|c| (c.clone() * Ratio::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut budget = ROOT_SEARCH_BUDGET;
    let ps = divisors(&ints[0].abs(), &mut budget)?;
    let qs = divisors(&ints[ints.len() - 1].abs(), &mut budget)?;
    for q in &qs {
        for p in &ps {
            for cand in [
                Ratio::new(p.clone(), q.clone()),
                Ratio::new(-p.clone(), q.clone()),
            ] {
                if f.eval(&cand).is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

fn divisors<I: ExactInt>(n: &I, budget: &mut u64) -> std::result::Result<Vec<I>, String> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = I::one();
    while d.clone() * d.clone() <= *n {
        if *budget == 0 {
            return Err("coefficients too large for the rational root search".into());
        }
        *budget -= 1;
        if n.is_multiple_of(&d) {
            let e = n.clone() / d.clone();
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d = d + I::one();
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}
