use crate::curve::CurveForm;
use crate::error::PointSchemeError;
use crate::points::{plane_points, PointSet, ProjPoint};
use exact_linalg::{FieldSpec, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// A verified reduced transverse intersection of two curves: exactly
/// deg F · deg G rational points, each cut out transversally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransverseCi {
    pub f: CurveForm,
    pub g: CurveForm,
    pub x: PointSet,
}

/// Samples a transverse complete intersection of type (a, b) over a prime
/// field, deterministically in the seed.
///
/// Candidate forms are products of random lines, so that all a·b
/// intersection points are guaranteed rational whenever they are distinct;
/// fully random forms of degrees (3,3) essentially never have an entirely
/// rational zero set. Each candidate is accepted only by the independent
/// criterion: a full scan of the plane finds exactly a·b common zeros and
/// the chart Jacobian of (F, G) is nonsingular at every one of them.
pub fn make_transverse_ci(
    a: i64,
    b: i64,
    field: FieldSpec,
    seed: u64,
    max_tries: u32,
) -> Result<TransverseCi, PointSchemeError> {
    let FieldSpec::Prime(p) = field else {
        return Err(PointSchemeError::PrimeFieldRequired);
    };
    if a < 1 {
        return Err(PointSchemeError::DegreeTooSmall(a));
    }
    if b < 1 {
        return Err(PointSchemeError::DegreeTooSmall(b));
    }
    if a.checked_mul(b).is_none_or(|ab| ab as u128 > p as u128) {
        return Err(PointSchemeError::IntersectionTooLarge { a, b, p });
    }
    let plane = plane_points(field)?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let f = random_line_product(field, a, &mut rng);
        let g = random_line_product(field, b, &mut rng);
        if let Some(x) = accept_transverse(&f, &g, (a * b) as usize, &plane) {
            return Ok(TransverseCi { f, g, x });
        }
    }
    Err(PointSchemeError::GenerationExhausted { tries: max_tries })
}

fn random_line_product(field: FieldSpec, degree: i64, rng: &mut ChaCha20Rng) -> CurveForm {
    let mut form: Option<CurveForm> = None;
    for _ in 0..degree {
        let line = random_line(field, rng);
        form = Some(match form {
            None => line,
            Some(f) => f.multiply(&line),
        });
    }
    form.expect("degree is at least one")
}

fn random_line(field: FieldSpec, rng: &mut ChaCha20Rng) -> CurveForm {
    let FieldSpec::Prime(p) = field else {
        unreachable!("caller checked the field");
    };
    loop {
        let normal: [Scalar; 3] = [
            field.from_i64(rng.gen_range(0..p) as i64),
            field.from_i64(rng.gen_range(0..p) as i64),
            field.from_i64(rng.gen_range(0..p) as i64),
        ];
        if normal.iter().any(|c| !c.is_zero()) {
            return CurveForm::line(field, normal).expect("nonzero normal");
        }
    }
}

/// The independent acceptance test: scan every rational point, demand
/// exactly `expected` common zeros, and transversality at each.
fn accept_transverse(
    f: &CurveForm,
    g: &CurveForm,
    expected: usize,
    plane: &[ProjPoint],
) -> Option<PointSet> {
    let mut common = Vec::new();
    for q in plane {
        if f.vanishes_at(q) && g.vanishes_at(q) {
            if common.len() == expected {
                return None; // too many already
            }
            common.push(q.clone());
        }
    }
    if common.len() != expected {
        return None;
    }
    if !common.iter().all(|q| jacobian_nonsingular(f, g, q)) {
        return None;
    }
    let x = PointSet::new(f.field(), common).expect("scan points are distinct");
    Some(x)
}

/// 2×2 Jacobian of (F, G) in the affine chart where `q` is finite.
fn jacobian_nonsingular(f: &CurveForm, g: &CurveForm, q: &ProjPoint) -> bool {
    let chart = q.chart_index();
    let axes: Vec<usize> = (0..3).filter(|&a| a != chart).collect();
    let gf = f.gradient_at(q.coords());
    let gg = g.gradient_at(q.coords());
    let det = &(&gf[axes[0]] * &gg[axes[1]]) - &(&gf[axes[1]] * &gg[axes[0]]);
    !det.is_zero()
}

/// Liaison inside a reduced transverse CI: the residual of Z is X ∖ Z.
///
/// Verifies that every point of `z` lies in `x` (reporting the index of the
/// first that does not) before taking the complement.
pub fn ci_residual(
    f: &CurveForm,
    g: &CurveForm,
    x: &PointSet,
    z: &PointSet,
) -> Result<PointSet, PointSchemeError> {
    if z.field() != x.field() {
        return Err(PointSchemeError::FieldMismatch);
    }
    debug_assert!(x
        .points()
        .iter()
        .all(|p| f.vanishes_at(p) && g.vanishes_at(p)));
    for (index, p) in z.points().iter().enumerate() {
        if !x.contains(p) {
            return Err(PointSchemeError::PointNotInIntersection { index });
        }
    }
    Ok(x.difference(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_one_one_is_a_single_point() {
        let f = FieldSpec::prime(101).unwrap();
        let ci = make_transverse_ci(1, 1, f, 0, 50).unwrap();
        assert_eq!(ci.x.degree(), 1);
        assert!(ci.f.vanishes_at(&ci.x.points()[0]));
        assert!(ci.g.vanishes_at(&ci.x.points()[0]));
    }

    #[test]
    fn type_two_three_has_six_transverse_points() {
        let f = FieldSpec::prime(101).unwrap();
        let ci = make_transverse_ci(2, 3, f, 1, 50).unwrap();
        assert_eq!((ci.f.degree(), ci.g.degree()), (2, 3));
        assert_eq!(ci.x.degree(), 6);
        for q in ci.x.points() {
            assert!(ci.f.vanishes_at(q) && ci.g.vanishes_at(q));
            assert!(jacobian_nonsingular(&ci.f, &ci.g, q));
        }
    }

    #[test]
    fn sampling_is_deterministic_in_the_seed() {
        let f = FieldSpec::prime(101).unwrap();
        let a = make_transverse_ci(3, 3, f, 42, 50).unwrap();
        let b = make_transverse_ci(3, 3, f, 42, 50).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.x.degree(), 9);
        let c = make_transverse_ci(3, 3, f, 43, 50).unwrap();
        assert_ne!(a.x, c.x);
    }

    #[test]
    fn preconditions_are_enforced() {
        let q = FieldSpec::rational();
        assert_eq!(
            make_transverse_ci(2, 2, q, 0, 10),
            Err(PointSchemeError::PrimeFieldRequired)
        );
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(
            make_transverse_ci(2, 3, f5, 0, 10),
            Err(PointSchemeError::IntersectionTooLarge { a: 2, b: 3, p: 5 })
        );
        let f = FieldSpec::prime(101).unwrap();
        assert_eq!(
            make_transverse_ci(0, 3, f, 0, 10),
            Err(PointSchemeError::DegreeTooSmall(0))
        );
    }

    #[test]
    fn residual_complements_inside_the_intersection() {
        let f = FieldSpec::prime(101).unwrap();
        let ci = make_transverse_ci(2, 3, f, 7, 50).unwrap();
        let z = PointSet::new(f, ci.x.points()[..2].to_vec()).unwrap();
        let y = ci_residual(&ci.f, &ci.g, &ci.x, &z).unwrap();
        assert_eq!(y.degree(), 4);
        for p in y.points() {
            assert!(!z.contains(p));
        }

        let all = ci_residual(&ci.f, &ci.g, &ci.x, &ci.x).unwrap();
        assert!(all.is_empty());
        let empty = PointSet::new(f, vec![]).unwrap();
        assert_eq!(ci_residual(&ci.f, &ci.g, &ci.x, &empty).unwrap(), ci.x);

        let outsider = PointSet::new(
            f,
            vec![plane_points(f)
                .unwrap()
                .into_iter()
                .find(|p| !ci.x.contains(p))
                .unwrap()],
        )
        .unwrap();
        let err = ci_residual(&ci.f, &ci.g, &ci.x, &outsider).unwrap_err();
        assert_eq!(err, PointSchemeError::PointNotInIntersection { index: 0 });
    }
}
