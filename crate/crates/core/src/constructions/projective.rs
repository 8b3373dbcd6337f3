use crate::algebra::{primality, FieldTable, Primality, PrimePower};
use crate::design::{verify_symmetric, DesignParams, IncidenceStructure};

use super::ConstructionError;

/// Points versus hyperplanes of PG(n-1, q), with the primality of λ.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    pub n: usize,
    pub q: u64,
    pub design: IncidenceStructure,
    pub params: DesignParams,
    pub lambda_primality: Primality,
}

/// Normalised vectors of GF(q)^n (first nonzero coordinate 1), in
/// lexicographic order of their coordinate tuples.
fn normalised_vectors(field: &FieldTable, n: usize) -> Vec<Vec<u32>> {
    let q = field.order();
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = (q as u64).pow(free as u32);
        for mut idx in 0..count {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            for i in (lead + 1..n).rev() {
                v[i] = (idx % q as u64) as u32;
                idx /= q as u64;
            }
            out.push(v);
        }
    }
    out
}

/// The symmetric design of points and hyperplanes of PG(n-1, q).
pub fn projective_space(n: usize, q: &PrimePower) -> Result<ProjectiveSpace, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::DimensionTooSmall { n });
    }
    let field = FieldTable::new(q.clone())?;
    let points = normalised_vectors(&field, n);
    let dot = |a: &[u32], x: &[u32]| {
        a.iter()
            .zip(x)
            .fold(0u32, |acc, (&ai, &xi)| field.add(acc, field.mul(ai, xi)))
    };
    let blocks = points
        .iter()
        .map(|a| {
            points
                .iter()
                .enumerate()
                .filter(|(_, x)| dot(a, x) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let design = IncidenceStructure::new(points.len(), blocks)?;
    let params = verify_symmetric(&design)?;
    let lambda_primality = primality(&(params.lambda as u64).into());
    Ok(ProjectiveSpace {
        n,
        q: field.order() as u64,
        design,
        params,
        lambda_primality,
    })
}

/// `((q^n-1)/(q-1), (q^(n-1)-1)/(q-1), (q^(n-2)-1)/(q-1))`.
pub fn projective_params(n: u32, q: u64) -> (u64, u64, u64) {
    let gauss = |m: u32| (q.pow(m) - 1) / (q - 1);
    (gauss(n), gauss(n - 1), gauss(n - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pg(n: usize, q: u64) -> ProjectiveSpace {
        projective_space(n, &PrimePower::from_order(q).unwrap()).unwrap()
    }

    #[test]
    fn fano_plane() {
        let s = pg(3, 2);
        assert_eq!((s.params.v, s.params.k, s.params.lambda), (7, 3, 1));
        assert_eq!(s.lambda_primality, Primality::Composite);
    }

    #[test]
    fn small_spaces_match_formula() {
        for (n, q) in [(3usize, 2u64), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2)] {
            let s = pg(n, q);
            let (v, k, l) = projective_params(n as u32, q);
            assert_eq!((s.params.v as u64, s.params.k as u64, s.params.lambda as u64), (v, k, l));
            for p in 0..s.design.v() {
                assert_eq!(s.design.replication(p) as u64, k);
            }
        }
        assert!(pg(4, 2).lambda_primality.is_prime());
        assert!(pg(5, 2).lambda_primality.is_prime());
        assert!(!pg(4, 3).lambda_primality.is_prime());
    }

    #[test]
    fn rejects_small_dimension() {
        let q = PrimePower::from_order(2u32).unwrap();
        assert!(matches!(projective_space(2, &q), Err(ConstructionError::DimensionTooSmall { n: 2 })));
    }
}
