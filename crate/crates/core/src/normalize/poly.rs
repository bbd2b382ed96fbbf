use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::gaussian::Gaussian;
use super::scalar::ExactInt;

/// Polynomial with exact rational coefficients, lowest degree first.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<I: ExactInt> {
    coeffs: Vec<Ratio<I>>,
}

impl<I: ExactInt> Poly<I> {
    pub fn new(mut coeffs: Vec<Ratio<I>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Ratio<I>) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Ratio::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Ratio::zero(), Ratio::one()])
    }

    /// `x − a`.
    pub fn linear_root(a: Ratio<I>) -> Self {
        Poly::new(vec![-a, Ratio::one()])
    }

    pub fn coeffs(&self) -> &[Ratio<I>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Ratio<I> {
        self.coeffs.get(k).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Ratio<I> {
        self.coeffs.last().cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Ratio::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, k: &Ratio<I>) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * Ratio::from_integer(int_from_usize::<I>(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Ratio<I>) -> Ratio<I> {
        self.coeffs
            .iter()
            .rev()
            .fold(Ratio::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_gaussian(&self, z: &Gaussian<I>) -> Gaussian<I> {
        self.coeffs.iter().rev().fold(Gaussian::zero(), |acc, c| {
            acc * z.clone() + Gaussian::real(c.clone())
        })
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.lead();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Ratio::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().expect("non-empty").clone() / lead.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - f.clone() * c.clone();
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Ratio::one() / self.lead()))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            acc.mul(inner).add(&Poly::constant(c.clone()))
        })
    }

    /// Homogenised composition `Σ c_k P^k Q^(d−k)` with `d` the given degree.
    pub fn homogeneous_compose(&self, p: &Self, q: &Self, d: usize) -> Self {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, c)| {
                acc.add(&p.pow(k).mul(&q.pow(d - k)).scale(c))
            })
    }
}

pub(crate) fn int_from_usize<I: ExactInt>(k: usize) -> I {
    (0..k).fold(I::zero(), |acc, _| acc + I::one())
}

impl<I: ExactInt> fmt::Display for Poly<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Ratio::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}
