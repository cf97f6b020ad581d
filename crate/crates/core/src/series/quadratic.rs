use num::{BigRational, One, Signed, Zero};
use serde::Serialize;

use super::gf::gf_f;
use super::poly::{least_positive_root, Polynomial};
use super::power::PowerSeries;

pub const P2: &str = "144x^25-3524x^24+38648x^23-259931x^22+1231750x^21-4420385x^20+12533805x^19\
    -28844031x^18+54839380x^17-87179343x^16+116833299x^15-132706667x^14\
    +128169929x^13-105396633x^12+73761400x^11-43835832x^10+22029889x^9\
    -9301917x^8+3269458x^7-944215x^6+220007x^5-40293x^4+5578x^3-548x^2+34x-1";

pub const P1: &str = "-48x^25+1380x^24-17556x^23+134339x^22-708318x^21+2775400x^20-8464162x^19\
    +20701382x^18-41428652x^17+68785738x^16-95667058x^15+112183057x^14\
    -111372132x^13+93798415x^12-67025068x^11+40562377x^10-20710152x^9+8865879x^8\
    -3153464x^7+920002x^6-216192x^5+39867x^4-5548x^3+547x^2-34x+1";

pub const P0: &str = "4x^25-132x^24+1921x^23-16624x^22+97464x^21-416740x^20+1361690x^19\
    -3508914x^18+7290078x^17-12404442x^16+17480077x^15-20556472x^14\
    +20271017x^13-16800814x^12+11703343x^11-6835800x^10+3331377x^9\
    -1343826x^8+443390x^7-117616x^6+24459x^5-3838x^4+427x^3-30x^2+x";

/// `p2 f^2 + p1 f + p0 = 0` for the class generating function `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub p2: Polynomial,
    pub p1: Polynomial,
    pub p0: Polynomial,
}

impl Default for Quadratic {
    fn default() -> Self {
        let parse = |s| Polynomial::parse(s).expect("literal polynomial");
        Quadratic { p2: parse(P2), p1: parse(P1), p0: parse(P0) }
    }
}

impl Quadratic {
    pub fn discriminant(&self) -> Polynomial {
        let four = BigRational::from_integer(4.into());
        &(&self.p1 * &self.p1) - &(&self.p2 * &self.p0).scale(&four)
    }

    /// `p2 s^2 + p1 s + p0` to the order of `s`.
    pub fn residual(&self, s: &PowerSeries) -> PowerSeries {
        let n = s.order();
        let lift = |p: &Polynomial| PowerSeries::from_polynomial(p, n);
        &(&(&lift(&self.p2) * &(s * s)) + &(&lift(&self.p1) * s)) + &lift(&self.p0)
    }
}

pub fn quadratic_residual(order: usize) -> PowerSeries {
    Quadratic::default().residual(&gf_f(order))
}

/// Orders below this make the ratio window fall in the early, non-monotone
/// part of the sequence; the ratio check is skipped there.
pub const RATIO_MIN_ORDER: usize = 30;
pub const RATIO_WINDOW: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    /// Discriminant at 1/4, as a decimal string of a rational.
    pub discriminant_at_quarter: String,
    pub exact_root_at_quarter: bool,
    /// Bisection interval `(lo, hi]` around the least positive root.
    pub least_root_interval: Option<(String, String)>,
    pub least_root_near_quarter: bool,
    /// `(n, a_{n+1}/a_n)` as floating display values.
    pub ratios: Vec<(usize, f64)>,
    /// `None` when the order is too small for the ratio window.
    pub ratios_in_range_and_increasing: Option<bool>,
}

impl GrowthReport {
    pub fn passes(&self) -> bool {
        (self.exact_root_at_quarter || self.least_root_near_quarter) && self.ratios_in_range_and_increasing != Some(false)
    }
}

pub fn root_tolerance() -> BigRational {
    BigRational::new(1.into(), 1_000_000_000.into())
}

pub fn growth_rate_checks_with(q: &Quadratic, order: usize) -> GrowthReport {
    let quarter = BigRational::new(1.into(), 4.into());
    let disc = q.discriminant();
    let at_quarter = disc.eval(&quarter);
    let tol = root_tolerance();
    let interval = least_positive_root(&disc, &tol);
    let near = interval
        .as_ref()
        .is_some_and(|(lo, hi)| (lo - &quarter).abs() <= tol && (hi - &quarter).abs() <= tol);

    let f = gf_f(order);
    let a = f.coefficients();
    let exact_ratios: Vec<(usize, BigRational)> =
        (1..order).map(|n| (n, &a[n + 1] / &a[n])).collect();
    let ratio_check = (order >= RATIO_MIN_ORDER).then(|| {
        let window = &exact_ratios[exact_ratios.len() - RATIO_WINDOW..];
        let (three, four) = (BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        window.iter().all(|(_, r)| *r > three && *r < four) && window.windows(2).all(|w| w[0].1 < w[1].1)
    });
    GrowthReport {
        discriminant_at_quarter: at_quarter.to_string(),
        exact_root_at_quarter: at_quarter.is_zero(),
        least_root_interval: interval.map(|(lo, hi)| (lo.to_string(), hi.to_string())),
        least_root_near_quarter: near,
        ratios: exact_ratios.iter().map(|(n, r)| (*n, to_f64(r))).collect(),
        ratios_in_range_and_increasing: ratio_check,
    }
}

pub fn growth_rate_checks(order: usize) -> GrowthReport {
    growth_rate_checks_with(&Quadratic::default(), order)
}

fn to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Residual with the constant term of `p0` bumped by one.
pub fn perturbed_p0() -> Quadratic {
    let mut q = Quadratic::default();
    q.p0 = &q.p0 + &Polynomial::constant(BigRational::one());
    q
}
