//! Generating functions of the class and its building blocks.

use num::{BigInt, BigRational, BigUint, One, Zero};

use super::poly::Polynomial;
use super::power::PowerSeries;

/// Numerator of the explicit correction term of `g`.
pub const G_NUMERATOR: &str = "1-13x+74x^2-247x^3+539x^4-805x^5+834x^6-595x^7+283x^8-80x^9+8x^10";

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly(text: &str) -> Polynomial {
    Polynomial::parse(text).expect("literal polynomial")
}

fn ratio(num: &PowerSeries, den: &PowerSeries) -> PowerSeries {
    num.checked_div(den).expect("denominator has unit constant term")
}

/// `x/(1 - x)`.
pub fn d_series(order: usize) -> PowerSeries {
    ratio(&PowerSeries::x(order), &PowerSeries::from_integers(&[1, -1], order))
}

/// `x^2/(1 - x^2)`.
pub fn y_series(order: usize) -> PowerSeries {
    ratio(&PowerSeries::from_integers(&[0, 0, 1], order), &PowerSeries::from_integers(&[1, 0, -1], order))
}

/// `1 + x`.
pub fn z_series(order: usize) -> PowerSeries {
    PowerSeries::from_integers(&[1, 1], order)
}

/// Non-empty 123-avoiders: `(1 - 2x - sqrt(1 - 4x)) / (2x)`.
pub fn catalan_gf(order: usize) -> PowerSeries {
    let n = order + 1;
    let root = PowerSeries::from_integers(&[1, -4], n).sqrt().expect("unit constant term");
    let numerator = &PowerSeries::from_integers(&[1, -2], n) - &root;
    numerator.divide_by_x().expect("numerator vanishes at 0").scale(&BigRational::new(1.into(), 2.into()))
}

/// `binomial(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || b > a {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(a as u64), BigUint::from(b as u64))
}

/// Ways to pick `l` disjoint adjacent pairs `(i, i + 1)` from `1..=m`.
pub fn interlacing_choices(m: u64, l: u64) -> BigUint {
    binomial(m as i64 - l as i64, l as i64)
}

/// Twice the sum over `n >= 4, k >= 0` of
/// `[C(n-k-2, k-2) z^(n-k-1) + 2 C(n-k-2, k-1) z^(n-k-2) + C(n-k-2, k) z^(n-k-3)] x^n y^k`.
pub fn simple_gf_summation(order: usize) -> PowerSeries {
    let x = PowerSeries::x(order);
    let y = y_series(order);
    let mut total = PowerSeries::zero(order);
    let mut x_n = x.pow(4);
    for n in 4..=order as i64 {
        let mut x_n_y_k = x_n.clone();
        let mut k = 0;
        while n + 2 * k <= order as i64 {
            let a = n - k - 2;
            let mut z_poly = Polynomial::zero();
            for (b, weight, power) in [(k - 2, 1u32, n - k - 1), (k - 1, 2, n - k - 2), (k, 1, n - k - 3)] {
                let c = binomial(a, b);
                if c.is_zero() {
                    continue;
                }
                assert!(power >= 0, "non-zero weight on a negative power of z");
                let scale = BigRational::from_integer(BigInt::from(c * weight));
                z_poly = &z_poly + &poly("1+x").pow(power as u32).scale(&scale);
            }
            if !z_poly.is_zero() {
                let term = &x_n_y_k * &PowerSeries::from_polynomial(&z_poly, order);
                total = &total + &term;
            }
            x_n_y_k = &x_n_y_k * &y;
            k += 1;
        }
        x_n = &x_n * &x;
    }
    total.scale(&int(2))
}

/// `2(t^4 + t^6 + t^9) / ((1 - t^2)(1 - 2t + t^3 - t^4))` for a series `t`.
fn simple_rational(t: &PowerSeries) -> PowerSeries {
    let order = t.order();
    let num = &(&t.pow(4) + &t.pow(6)) + &t.pow(9);
    let one = PowerSeries::one(order);
    let den_a = &one - &t.pow(2);
    let den_b = &(&(&one - &t.scale(&int(2))) + &t.pow(3)) - &t.pow(4);
    ratio(&num.scale(&int(2)), &(&den_a * &den_b))
}

/// Simple members of Av(2341, 4123, 3412), from length 4 on.
pub fn simple_gf_closed(order: usize) -> PowerSeries {
    simple_rational(&PowerSeries::x(order))
}

/// Sum-indecomposable members assembled from their five types, with
/// `d = x/(1 - x)`: `(c - d^2) + S(d) + d^7 - 2d^4/(1 - d^2)`.
pub fn gf_g_assembled(order: usize) -> PowerSeries {
    let c = catalan_gf(order);
    let d = d_series(order);
    let d2 = d.pow(2);
    let overlap = ratio(&d.pow(4).scale(&int(2)), &(&PowerSeries::one(order) - &d2));
    let s = simple_rational(&d);
    &(&(&(&c - &d2) + &s) + &d.pow(7)) - &overlap
}

/// `c - x^2 N(x) / ((1 - x)^7 (1 - 2x)(1 - 6x + 12x^2 - 9x^3 + x^4))`.
pub fn gf_g_explicit(order: usize) -> PowerSeries {
    let num = &poly(G_NUMERATOR) * &poly("x^2");
    let den = &(&poly("1-x").pow(7) * &poly("1-2x")) * &poly("1-6x+12x^2-9x^3+x^4");
    let correction = ratio(&PowerSeries::from_polynomial(&num, order), &PowerSeries::from_polynomial(&den, order));
    &catalan_gf(order) - &correction
}

pub fn gf_g(order: usize) -> PowerSeries {
    gf_g_assembled(order)
}

/// Av(2341, 4123): `1/(1 - g)`.
pub fn gf_f(order: usize) -> PowerSeries {
    let g = gf_g(order);
    (&PowerSeries::one(order) - &g).reciprocal().expect("g has zero constant term")
}

pub fn is_one(s: &PowerSeries) -> bool {
    s.coeff(0).is_one() && s.coefficients()[1..].iter().all(Zero::is_zero)
}
