use serde::Serialize;

use super::interval::{first_skew_block, first_sum_block, longest_interval_from};
use super::Permutation;
use crate::error::{Error, Result};

/// `skeleton[parts[0], ..., parts[m-1]]` with a simple skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub skeleton: Permutation,
    pub parts: Vec<Permutation>,
}

impl Decomposition {
    pub fn inflate(&self) -> Permutation {
        inflate(&self.skeleton, &self.parts).expect("decomposition arity is consistent")
    }
}

/// The inflation `skeleton[parts...]`: entry `i` of the skeleton is replaced
/// by an interval order isomorphic to `parts[i]`.
pub fn inflate(skeleton: &Permutation, parts: &[Permutation]) -> Result<Permutation> {
    if skeleton.len() != parts.len() {
        return Err(Error::ArityMismatch { skeleton: skeleton.len(), parts: parts.len() });
    }
    if let Some(i) = parts.iter().position(Permutation::is_empty) {
        return Err(Error::EmptyPart(i));
    }
    // value offset of each block = total size of blocks with smaller skeleton value
    let mut offset = vec![0; skeleton.len()];
    let by_value = skeleton.positions();
    let mut acc = 0;
    for &i in &by_value {
        offset[i] = acc;
        acc += parts[i].len();
    }
    let values = parts
        .iter()
        .zip(&offset)
        .flat_map(|(part, &off)| part.values().iter().map(move |&v| v + off))
        .collect();
    Ok(Permutation::from_vec_unchecked(values))
}

/// Unique decomposition into a simple skeleton; when the skeleton is 12
/// (resp. 21) the first part is sum (resp. skew) indecomposable. The skeleton
/// is `1` only for the permutation `1`.
pub fn substitution_decompose(p: &Permutation) -> Result<Decomposition> {
    let n = p.len();
    if n == 0 {
        return Err(Error::EmptyPermutation);
    }
    let v = p.values();
    if n == 1 {
        return Ok(Decomposition { skeleton: p.clone(), parts: vec![p.clone()] });
    }
    let split = |k: usize, skeleton: &str| Decomposition {
        skeleton: skeleton.parse().expect("literal"),
        parts: vec![Permutation::standardize(&v[..k]), Permutation::standardize(&v[k..])],
    };
    if let Some(k) = first_sum_block(v) {
        return Ok(split(k, "12"));
    }
    if let Some(k) = first_skew_block(v) {
        return Ok(split(k, "21"));
    }
    // Neither sum nor skew decomposable: the maximal proper intervals are
    // disjoint and tile the permutation, so greedily taking the longest
    // interval from each block start recovers them.
    let longest = longest_interval_from(p);
    let mut parts = Vec::new();
    let mut reps = Vec::new();
    let mut start = 0;
    while start < n {
        let len = longest[start];
        parts.push(Permutation::standardize(&v[start..start + len]));
        reps.push(v[start]);
        start += len;
    }
    Ok(Decomposition { skeleton: Permutation::standardize(&reps), parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;
    use crate::perm::interval::is_simple;

    #[test]
    fn inflation_example() {
        let parts = [perm!("21"), perm!("132"), perm!("1"), perm!("123")];
        assert_eq!(inflate(&perm!("3142"), &parts).unwrap(), perm!("871329456"));
        let d = substitution_decompose(&perm!("871329456")).unwrap();
        assert_eq!(d.skeleton, perm!("3142"));
        assert_eq!(d.parts, parts.to_vec());
    }

    #[test]
    fn trivial_inflations() {
        let a = perm!("2413");
        assert_eq!(inflate(&perm!("1"), std::slice::from_ref(&a)).unwrap(), a);
        let singles = vec![perm!("1"); 5];
        assert_eq!(inflate(&perm!("31524"), &singles).unwrap(), perm!("31524"));
    }

    #[test]
    fn inflate_errors() {
        assert_eq!(
            inflate(&perm!("12"), &[perm!("1")]),
            Err(Error::ArityMismatch { skeleton: 2, parts: 1 })
        );
        assert_eq!(
            inflate(&perm!("12"), &[perm!("1"), Permutation::empty()]),
            Err(Error::EmptyPart(1))
        );
        assert_eq!(substitution_decompose(&Permutation::empty()), Err(Error::EmptyPermutation));
    }

    #[test]
    fn decompose_examples() {
        let d = substitution_decompose(&perm!("31524")).unwrap();
        assert_eq!(d.skeleton, perm!("31524"));
        assert_eq!(d.parts, vec![perm!("1"); 5]);
        let d = substitution_decompose(&perm!("123")).unwrap();
        assert_eq!(d.skeleton, perm!("12"));
        assert_eq!(d.parts, vec![perm!("1"), perm!("12")]);
        let d = substitution_decompose(&perm!("321")).unwrap();
        assert_eq!(d.skeleton, perm!("21"));
        assert_eq!(d.parts, vec![perm!("1"), perm!("21")]);
    }

    #[test]
    fn roundtrip_and_simplicity_exhaustive() {
        for n in 1..=8 {
            for p in Permutation::all(n) {
                let d = substitution_decompose(&p).unwrap();
                assert_eq!(d.inflate(), p);
                assert!(is_simple(&d.skeleton));
                assert_eq!(d.parts.len(), d.skeleton.len());
                assert_eq!(is_simple(&p), d.skeleton == p, "{p}");
            }
        }
    }
}
