use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Laurent polynomial in `t` with integer coefficients.
///
/// Stored as `Σ coeffs[k] t^{low + k}`, with no zero at either end. Most
/// values are honest polynomials (`low ≥ 0`); negative powers only arise
/// from inverting the diagonal `t^{n(λ)}` of the Kostka–Foulkes matrix.
///
/// Arithmetic is checked: an `i64` overflow panics rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        TPoly::monomial(c, 0)
    }

    /// `c t^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        TPoly::laurent(k, vec![c])
    }

    /// `t^k`.
    pub fn t_pow(k: i32) -> Self {
        TPoly::monomial(1, k)
    }

    /// Ascending coefficients starting at `t^0`.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        TPoly::laurent(0, coeffs)
    }

    /// Ascending coefficients starting at `t^low`.
    pub fn laurent(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = TPoly { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let idx = k - self.low;
        if idx < 0 {
            0
        } else {
            self.coeffs.get(idx as usize).copied().unwrap_or(0)
        }
    }

    /// True when no negative power occurs.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Ascending coefficients from `t^0`, if this is a polynomial.
    pub fn to_coeffs(&self) -> Option<Vec<i64>> {
        if !self.is_polynomial() {
            return None;
        }
        let mut out = vec![0; self.low.max(0) as usize];
        out.extend_from_slice(&self.coeffs);
        Some(out)
    }

    /// Value at an integer; `None` on overflow or when a negative power
    /// does not divide evenly (only `t = ±1` is safe for Laurent inputs).
    pub fn eval(&self, v: i64) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        if self.low < 0 && v.abs() != 1 {
            return None;
        }
        let mut acc: i64 = 0;
        for (k, &c) in self.coeffs.iter().enumerate() {
            let e = self.low + k as i32;
            let p = if v.abs() == 1 {
                if v == -1 && e.rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                }
            } else {
                v.checked_pow(e as u32)?
            };
            acc = acc.checked_add(c.checked_mul(p)?)?;
        }
        Some(acc)
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs
            .iter()
            .try_fold(0i64, |a, &c| a.checked_add(c))
            .expect("TPoly coefficient overflow")
    }

    /// The substitution `t ↦ t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        let Some(hi) = self.degree() else {
            return TPoly::zero();
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        TPoly::laurent(-hi, coeffs)
    }

    /// Multiplicative inverse when this is a unit `±t^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] if c.abs() == 1 => Some(TPoly::monomial(*c, -self.low)),
            _ => None,
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        TPoly::laurent(
            self.low,
            self.coeffs
                .iter()
                .map(|&a| a.checked_mul(c).expect("TPoly coefficient overflow"))
                .collect(),
        )
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (self.low + k as i32, c))
    }
}

fn add_into(a: &TPoly, b: &TPoly, sign: i64) -> TPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return b.scale(sign);
    }
    let low = a.low.min(b.low);
    let hi = a.degree().unwrap().max(b.degree().unwrap());
    let coeffs = (low..=hi)
        .map(|k| {
            a.coeff(k)
                .checked_add(b.coeff(k).checked_mul(sign).expect("TPoly coefficient overflow"))
                .expect("TPoly coefficient overflow")
        })
        .collect();
    TPoly::laurent(low, coeffs)
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        add_into(self, rhs, 1)
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        add_into(&self, &rhs, 1)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        add_into(self, rhs, -1)
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        add_into(&self, &rhs, -1)
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        *self = add_into(self, rhs, 1);
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        *self = add_into(self, rhs, -1);
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let p = a.checked_mul(b).expect("TPoly coefficient overflow");
                coeffs[i + j] = coeffs[i + j].checked_add(p).expect("TPoly coefficient overflow");
            }
        }
        TPoly::laurent(self.low + rhs.low, coeffs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl From<i64> for TPoly {
    fn from(c: i64) -> Self {
        TPoly::constant(c)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    low: i32,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Plain(Vec<i64>),
    Laurent(LaurentRepr),
}

/// Polynomials serialize as ascending arrays from `t^0`; values with a
/// negative power as `{"low": k, "coeffs": [...]}`.
impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_coeffs() {
            Some(c) => c.serialize(s),
            None => LaurentRepr {
                low: self.low,
                coeffs: self.coeffs.clone(),
            }
            .serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match Repr::deserialize(d)? {
            Repr::Plain(c) => TPoly::from_coeffs(c),
            Repr::Laurent(l) => TPoly::laurent(l.low, l.coeffs),
        })
    }
}
