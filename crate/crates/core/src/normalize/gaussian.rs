use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::scalar::ExactInt;
use crate::error::{Error, Result};

/// `re + im·i` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian<I: ExactInt> {
    pub re: Ratio<I>,
    pub im: Ratio<I>,
}

impl<I: ExactInt> Gaussian<I> {
    pub fn new(re: Ratio<I>, im: Ratio<I>) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Ratio<I>) -> Self {
        Gaussian {
            re,
            im: Ratio::zero(),
        }
    }

    pub fn i() -> Self {
        Gaussian {
            re: Ratio::zero(),
            im: Ratio::one(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Ratio::zero())
    }

    pub fn one() -> Self {
        Self::real(Ratio::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> Ratio<I> {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn scale(&self, k: &Ratio<I>) -> Self {
        Gaussian {
            re: self.re.clone() * k.clone(),
            im: self.im.clone() * k.clone(),
        }
    }
}

impl<I: ExactInt> Add for Gaussian<I> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gaussian {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl<I: ExactInt> Sub for Gaussian<I> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gaussian {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl<I: ExactInt> Mul for Gaussian<I> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Gaussian {
            re: self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl<I: ExactInt> Div for Gaussian<I> {
    type Output = Self;
    /// Panics on division by zero, like `Ratio`.
    fn div(self, o: Self) -> Self {
        let n = o.norm_sqr();
        let q = self * o.conj();
        Gaussian {
            re: q.re / n.clone(),
            im: q.im / n,
        }
    }
}

impl<I: ExactInt> Neg for Gaussian<I> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<I: ExactInt> fmt::Display for Gaussian<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &Ratio<I>| {
            if v.is_one() {
                write!(f, "i")
            } else {
                write!(f, "{v}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-")?;
                }
                imag(f, &self.im.abs())
            }
            (false, false) => {
                write!(
                    f,
                    "{}{}",
                    self.re,
                    if self.im.is_negative() { "-" } else { "+" }
                )?;
                imag(f, &self.im.abs())
            }
        }
    }
}

/// A point of the Riemann sphere with Gaussian-rational coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point<I: ExactInt> {
    Finite(Gaussian<I>),
    Infinity,
}

impl<I: ExactInt> Point<I> {
    pub fn real(q: Ratio<I>) -> Self {
        Point::Finite(Gaussian::real(q))
    }

    pub fn from_int(k: i64) -> Self
    where
        I: From<i64>,
    {
        Point::real(Ratio::from_integer(I::from(k)))
    }

    pub fn zero() -> Self {
        Point::Finite(Gaussian::zero())
    }

    pub fn one() -> Self {
        Point::Finite(Gaussian::one())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    /// Real or `∞`.
    pub fn is_real(&self) -> bool {
        match self {
            Point::Finite(z) => z.is_real(),
            Point::Infinity => true,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Point::Finite(z) => Point::Finite(z.conj()),
            Point::Infinity => Point::Infinity,
        }
    }

    /// Whether the point is one of `0, 1, ∞`.
    pub fn is_standard(&self) -> bool {
        match self {
            Point::Finite(z) => z.is_real() && (z.re.is_zero() || z.re.is_one()),
            Point::Infinity => true,
        }
    }

    pub fn as_real(&self) -> Option<&Ratio<I>> {
        match self {
            Point::Finite(z) if z.is_real() => Some(&z.re),
            _ => None,
        }
    }
}

impl<I: ExactInt> fmt::Display for Point<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => write!(f, "{z}"),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

fn parse_ratio<I: ExactInt>(s: &str, whole: &str) -> Result<Ratio<I>> {
    s.parse::<Ratio<I>>()
        .map_err(|_| Error::Parse(format!("bad rational {s:?} in {whole:?}")))
}

/// Parses `"p/q"`, `"p/q+r/si"`, `"-i"`, `"3/2i"` or `"inf"`.
impl<I: ExactInt> FromStr for Point<I> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty value".into()));
        }
        if s == "inf" || s == "∞" {
            return Ok(Point::Infinity);
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Point::real(parse_ratio(s, text)?));
        };
        // Split "re±im" at the last sign that is not leading.
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re.is_empty() {
            Ratio::zero()
        } else {
            parse_ratio(re, text)?
        };
        let im = match im {
            "" | "+" => Ratio::one(),
            "-" => -Ratio::<I>::one(),
            other => parse_ratio(other.strip_prefix('+').unwrap_or(other), text)?,
        };
        Ok(Point::Finite(Gaussian::new(re, im)))
    }
}
