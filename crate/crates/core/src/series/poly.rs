use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `x` with exact rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_integers(&[0, 1])
    }

    /// Parses integer polynomials written like `144x^25-3524x^24+...+34x-1`.
    /// Whitespace is ignored; terms may repeat a power and are summed.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::EmptyToken);
        }
        let bad = || Error::InvalidToken(text.to_string());
        let mut coeffs: Vec<BigRational> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ if rest.len() == s.len() => (1, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (coef, power) = match term.split_once('x') {
                None => (term, 0),
                Some((c, p)) => {
                    let power = match p.strip_prefix('^') {
                        None if p.is_empty() => 1,
                        Some(d) => d.parse::<usize>().map_err(|_| bad())?,
                        None => return Err(bad()),
                    };
                    (c.strip_suffix('*').unwrap_or(c), power)
                }
            };
            let magnitude: BigInt = if coef.is_empty() { BigInt::one() } else { coef.parse().map_err(|_| bad())? };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRational::zero());
            }
            coeffs[power] += BigRational::from_integer(magnitude * sign);
        }
        Ok(Self::new(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(BigRational::one()), |acc, _| &acc * self)
    }

    /// Euclidean division: `(q, r)` with `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Precondition("division by the zero polynomial".into()));
        };
        let lead = divisor.leading().expect("non-zero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().expect("non-empty") / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is non-zero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, each simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = Self::gcd(self, &self.derivative());
        self.div_rem(&g).expect("gcd is non-zero").0
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("divisor is non-zero");
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }
}

/// Sign changes of a Sturm sequence at `at`, zeros skipped.
fn sign_changes(seq: &[Polynomial], at: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(at))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots in `(lo, hi]`, for `lo < hi`.
pub fn count_roots(sturm: &[Polynomial], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes(sturm, lo).saturating_sub(sign_changes(sturm, hi))
}

/// Bound on the absolute value of every root (Cauchy).
pub fn root_bound(p: &Polynomial) -> BigRational {
    let lead = p.leading().expect("non-zero polynomial").abs();
    let max = p.coeffs.iter().rev().skip(1).map(|c| c.abs() / &lead).max().unwrap_or_else(BigRational::zero);
    BigRational::one() + max
}

/// Bisects to an interval `(lo, hi]` of width below `tolerance` containing
/// the least positive root of `p`, if any.
pub fn least_positive_root(p: &Polynomial, tolerance: &BigRational) -> Option<(BigRational, BigRational)> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let sf = p.squarefree_part();
    let sturm = sf.sturm_sequence();
    let mut lo = BigRational::zero();
    let mut hi = root_bound(&sf);
    if count_roots(&sturm, &lo, &hi) == 0 {
        return None;
    }
    let two = BigRational::from_integer(2.into());
    // (0, lo] holds no root; (lo, hi] holds at least one
    while &hi - &lo >= *tolerance {
        let mid = (&lo + &hi) / &two;
        if count_roots(&sturm, &lo, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some((lo, hi))
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mag = if mag.is_one() && i > 0 { String::new() } else { mag.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            write!(f, "{sign}{mag}{var}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_and_display() {
        let p = Polynomial::parse("3x^2 - x + 7").unwrap();
        assert_eq!(p, Polynomial::from_integers(&[7, -1, 3]));
        assert_eq!(p.to_string(), "3x^2-x+7");
        assert_eq!(Polynomial::parse("-x^3+2x").unwrap(), Polynomial::from_integers(&[0, 2, 0, -1]));
        assert_eq!(Polynomial::parse("x+x").unwrap(), Polynomial::from_integers(&[0, 2]));
        assert!(Polynomial::parse("").is_err());
        assert!(Polynomial::parse("3y").is_err());
        assert!(Polynomial::parse("2x^").is_err());
    }

    #[test]
    fn division_and_gcd() {
        // (x - 1)^2 (x + 2)
        let p = Polynomial::from_integers(&[2, -3, 0, 1]);
        let (quot, r) = p.div_rem(&Polynomial::from_integers(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(quot, Polynomial::from_integers(&[-2, 1, 1]));
        assert_eq!(p.squarefree_part().monic(), Polynomial::from_integers(&[-2, 1, 1]));
        assert_eq!(Polynomial::gcd(&p, &p.derivative()), Polynomial::from_integers(&[-1, 1]));
        assert_eq!(p.eval(&q(1, 1)), q(0, 1));
        assert_eq!(p.eval(&q(1, 2)), q(5, 8));
    }

    #[test]
    fn sturm_counts_and_bisection() {
        // (4x - 1)(x - 2)(x + 3)
        let p = &(&Polynomial::from_integers(&[-1, 4]) * &Polynomial::from_integers(&[-2, 1]))
            * &Polynomial::from_integers(&[3, 1]);
        let sturm = p.sturm_sequence();
        assert_eq!(count_roots(&sturm, &q(-10, 1), &q(10, 1)), 3);
        assert_eq!(count_roots(&sturm, &q(0, 1), &q(1, 1)), 1);
        let (lo, hi) = least_positive_root(&p, &q(1, 1_000_000)).unwrap();
        assert!(lo < q(1, 4) && q(1, 4) <= hi);
        assert!(least_positive_root(&Polynomial::from_integers(&[1, 0, 1]), &q(1, 100)).is_none());
    }
}
