use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{avoids, avoids_all, is_simple, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimpleCategory {
    Contains123Only,
    Contains3412Only,
    BothIs5274163,
    NeitherParallelAlternation,
}

/// Odd values descending, then even values descending: 3142, 531642, ...
pub fn horizontal_alternation(k: usize) -> Permutation {
    let odd = (1..=k).rev().map(|i| 2 * i - 1);
    let even = (1..=k).rev().map(|i| 2 * i);
    Permutation::from_vec_unchecked(odd.chain(even).collect())
}

/// The two 123-avoiding parallel alternations of length `2k` (k >= 2).
pub fn parallel_alternations(k: usize) -> [Permutation; 2] {
    let h = horizontal_alternation(k);
    let v = h.inverse();
    [h, v]
}

pub fn is_parallel_alternation(p: &Permutation) -> bool {
    let n = p.len();
    n >= 4 && n.is_multiple_of(2) && parallel_alternations(n / 2).contains(p)
}

pub fn classify_simple(p: &Permutation) -> Result<SimpleCategory> {
    let basis = ["2341", "4123"].map(|s| s.parse::<Permutation>().expect("literal"));
    if p.len() < 4 || !is_simple(p) || !avoids_all(p, &basis) {
        return Err(Error::Precondition(format!("{p} is not a simple member of Av(2341, 4123) of length >= 4")));
    }
    let has_123 = !avoids(p, &"123".parse()?);
    let has_3412 = !avoids(p, &"3412".parse()?);
    let category = match (has_123, has_3412) {
        (true, false) => SimpleCategory::Contains123Only,
        (false, true) => SimpleCategory::Contains3412Only,
        (true, true) if *p == "5274163".parse()? => SimpleCategory::BothIs5274163,
        (false, false) if is_parallel_alternation(p) => SimpleCategory::NeitherParallelAlternation,
        _ => return Err(Error::Unclassifiable(p.to_string())),
    };
    Ok(category)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    #[test]
    fn alternations() {
        assert_eq!(parallel_alternations(2), [perm!("3142"), perm!("2413")]);
        assert_eq!(horizontal_alternation(5), perm!("9,7,5,3,1,10,8,6,4,2"));
        assert_eq!(horizontal_alternation(5).inverse(), perm!("5,10,4,9,3,8,2,7,1,6"));
        assert!(is_parallel_alternation(&perm!("2413")));
        assert!(!is_parallel_alternation(&perm!("5274163")));
        assert!(!is_parallel_alternation(&perm!("21")));
    }

    #[test]
    fn examples() {
        assert_eq!(classify_simple(&perm!("5274163")), Ok(SimpleCategory::BothIs5274163));
        assert_eq!(classify_simple(&perm!("2413")), Ok(SimpleCategory::NeitherParallelAlternation));
        assert_eq!(classify_simple(&perm!("4,1,3,7,5,2,10,8,6,9")), Ok(SimpleCategory::Contains123Only));
        assert!(classify_simple(&perm!("21")).is_err());
        assert!(classify_simple(&perm!("1234")).is_err());
    }

    #[test]
    fn exactly_two_alternations_per_even_length() {
        let pattern_123 = perm!("123");
        let pattern_3412 = perm!("3412");
        for n in 4..=10 {
            let found = Permutation::all(n)
                .filter(|p| {
                    is_simple(p) && avoids(p, &pattern_123) && avoids(p, &pattern_3412)
                })
                .count();
            assert_eq!(found, if n % 2 == 0 { 2 } else { 0 }, "n = {n}");
        }
    }
}
