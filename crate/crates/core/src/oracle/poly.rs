use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{AnalysisError, Result};

/// Univariate polynomial in `s` with arbitrary-precision integer
/// coefficients, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigInt>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `s^d`
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero of degree 0.
    pub fn is_nonzero_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    fn shifted(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, sign-normalised so the leading coefficient is
    /// positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Remainder of `self` by `divisor` after scaling `self` by powers of
    /// the divisor's leading coefficient, so everything stays integral.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree().expect("pseudo-remainder by zero");
        let lb = divisor.leading().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(lb) - &divisor.scale(&lr).shifted(dr - db);
        }
        r
    }

    /// Exact quotient `self / divisor`; `None` if the division leaves a
    /// remainder or a non-integral coefficient.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.leading().unwrap();
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return Some(Self::zero());
        };
        if dr < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (quot, rem) = r.leading().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            let term = Self::constant(quot.clone()).shifted(dr - db);
            r = &r - &(divisor * &term);
            q[dr - db] = quot;
        }
        Some(Self::new(q))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        ExactPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::new(out)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (d, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{abs}s")?,
                (_, true) => write!(f, "s^{d}")?,
                (_, false) => write!(f, "{abs}s^{d}")?,
            }
        }
        Ok(())
    }
}

/// Primitive gcd over the rationals, as an integer polynomial with
/// positive leading coefficient. A nonzero constant gcd is returned as `1`.
pub fn poly_gcd(a: &ExactPoly, b: &ExactPoly) -> Result<ExactPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(AnalysisError::ZeroGcd),
        (true, false) => return Ok(b.primitive_part()),
        (false, true) => return Ok(a.primitive_part()),
        _ => {}
    }
    let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        if y.is_nonzero_constant() {
            return Ok(ExactPoly::one());
        }
        let r = x.pseudo_rem(&y);
        if r.is_zero() {
            return Ok(y);
        }
        x = y;
        y = r.primitive_part();
    }
}
