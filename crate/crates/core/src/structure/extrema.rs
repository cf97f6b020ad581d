use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A point of the permutation plot. Coordinates here are 1-based:
/// `x` is the position, `y` the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathSource {
    LrMax,
    RlMin,
}

/// Interior corner of one of the two staircase paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Inflection {
    pub x: usize,
    pub y: usize,
    pub source: PathSource,
}

/// Left-to-right maxima and right-to-left minima joined by axis-parallel
/// paths. The l-r max path turns at `(q, p(p))` between consecutive maxima at
/// positions `p < q`; the r-l min path turns at `(p, p(q))` between
/// consecutive minima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremaDiagram {
    /// 1-based, increasing.
    pub lr_max_positions: Vec<usize>,
    /// 1-based, increasing.
    pub rl_min_positions: Vec<usize>,
    /// Both paths' inflections, ordered by `(x, y)`.
    pub inflections: Vec<Inflection>,
}

impl ExtremaDiagram {
    pub fn lr_inflections(&self) -> impl Iterator<Item = &Inflection> {
        self.inflections.iter().filter(|i| i.source == PathSource::LrMax)
    }

    pub fn rl_inflections(&self) -> impl Iterator<Item = &Inflection> {
        self.inflections.iter().filter(|i| i.source == PathSource::RlMin)
    }

    /// Inflections strictly increasing in both coordinates with alternating sources.
    pub fn inflections_alternate(&self) -> bool {
        self.inflections.windows(2).all(|w| {
            w[0].x < w[1].x && w[0].y < w[1].y && w[0].source != w[1].source
        })
    }

    /// True when some entry is both an l-r max and an r-l min.
    pub fn has_shared_extremum(&self) -> bool {
        self.lr_max_positions.iter().any(|p| self.rl_min_positions.binary_search(p).is_ok())
    }
}

pub fn extrema_diagram(p: &Permutation) -> Result<ExtremaDiagram> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let v = p.values();
    let n = v.len();
    let mut lr_max_positions = Vec::new();
    let mut best = 0;
    for (i, &x) in v.iter().enumerate() {
        if x > best {
            best = x;
            lr_max_positions.push(i + 1);
        }
    }
    let mut rl_min_positions = Vec::new();
    let mut least = usize::MAX;
    for i in (0..n).rev() {
        if v[i] < least {
            least = v[i];
            rl_min_positions.push(i + 1);
        }
    }
    rl_min_positions.reverse();

    let at = |pos: usize| v[pos - 1];
    let mut inflections: Vec<Inflection> = lr_max_positions
        .windows(2)
        .map(|w| Inflection { x: w[1], y: at(w[0]), source: PathSource::LrMax })
        .chain(
            rl_min_positions
                .windows(2)
                .map(|w| Inflection { x: w[0], y: at(w[1]), source: PathSource::RlMin }),
        )
        .collect();
    inflections.sort_by_key(|i| (i.x, i.y));
    Ok(ExtremaDiagram { lr_max_positions, rl_min_positions, inflections })
}

pub fn inflections_alternate(p: &Permutation) -> Result<bool> {
    Ok(extrema_diagram(p)?.inflections_alternate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;
    use PathSource::*;

    fn infl(x: usize, y: usize, source: PathSource) -> Inflection {
        Inflection { x, y, source }
    }

    #[test]
    fn decreasing_has_no_inflections() {
        let d = extrema_diagram(&perm!("321")).unwrap();
        assert_eq!(d.lr_max_positions, vec![1]);
        assert_eq!(d.rl_min_positions, vec![3]);
        assert!(d.inflections.is_empty());
        assert!(extrema_diagram(&Permutation::empty()).is_err());
    }

    #[test]
    fn diagram_of_2413() {
        let d = extrema_diagram(&perm!("2413")).unwrap();
        assert_eq!(d.lr_max_positions, vec![1, 2]);
        assert_eq!(d.rl_min_positions, vec![3, 4]);
        assert_eq!(d.inflections, vec![infl(2, 2, LrMax), infl(3, 3, RlMin)]);
        assert!(d.inflections_alternate());
    }

    #[test]
    fn identity_inflections() {
        for n in 1..=6 {
            let d = extrema_diagram(&Permutation::identity(n)).unwrap();
            assert_eq!(d.lr_max_positions, (1..=n).collect::<Vec<_>>());
            assert_eq!(d.rl_min_positions, (1..=n).collect::<Vec<_>>());
            assert_eq!(d.lr_inflections().count(), n - 1);
            assert_eq!(d.rl_inflections().count(), n - 1);
            assert_eq!(d.inflections_alternate(), n == 1);
        }
    }

    #[test]
    fn figure_example_alternates() {
        let p = perm!("4,1,3,7,5,2,10,8,6,9");
        let d = extrema_diagram(&p).unwrap();
        assert_eq!(d.lr_max_positions, vec![1, 4, 7]);
        assert_eq!(d.rl_min_positions, vec![2, 6, 9, 10]);
        assert_eq!(
            d.inflections,
            vec![
                infl(2, 2, RlMin),
                infl(4, 4, LrMax),
                infl(6, 6, RlMin),
                infl(7, 7, LrMax),
                infl(9, 9, RlMin)
            ]
        );
        assert!(d.inflections_alternate());
        assert!(inflections_alternate(&perm!("21")).unwrap());
    }

    #[test]
    fn three_four_one_two_breaks_alternation() {
        // 351624 contains 3412; its first two inflections decrease in y
        let d = extrema_diagram(&perm!("351624")).unwrap();
        assert_eq!(d.inflections[0], infl(2, 3, LrMax));
        assert_eq!(d.inflections[1], infl(3, 2, RlMin));
        assert!(!d.inflections_alternate());
    }
}
