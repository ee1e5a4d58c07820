use crate::curve::CurveForm;
use crate::error::PointSchemeError;
use crate::hilbert::monomial_count;
use crate::points::{plane_points, PointSet, ProjPoint};
use exact_linalg::{FieldSpec, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Families of seeded point-set instances for the property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// m points with no three collinear.
    Generic(usize),
    /// k points on a common random line plus extra points off it, with no
    /// accidental collinearity involving the extras.
    CollinearPlus(usize, usize),
    /// m smooth rational points of a random curve of the given degree
    /// (prime fields only: the points are found by scanning the plane).
    OnCurve(i64, usize),
}

const RATIONAL_COORDINATE_BOUND: i64 = 30;
const CURVE_TRIES: u32 = 40;

/// Draws the requested instance deterministically in the seed.
pub fn gen_points(
    kind: PointKind,
    field: FieldSpec,
    seed: u64,
) -> Result<PointSet, PointSchemeError> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    match kind {
        PointKind::Generic(m) => gen_generic(field, m, &mut rng),
        PointKind::CollinearPlus(k, extra) => gen_collinear_plus(field, k, extra, &mut rng),
        PointKind::OnCurve(degree, m) => gen_on_curve(field, degree, m, &mut rng),
    }
}

fn random_coordinate(field: FieldSpec, rng: &mut ChaCha20Rng) -> i64 {
    match field {
        FieldSpec::Prime(p) => rng.gen_range(0..p) as i64,
        FieldSpec::Rational => {
            rng.gen_range(-RATIONAL_COORDINATE_BOUND..=RATIONAL_COORDINATE_BOUND)
        }
    }
}

fn random_affine_point(field: FieldSpec, rng: &mut ChaCha20Rng) -> ProjPoint {
    let a = random_coordinate(field, rng);
    let b = random_coordinate(field, rng);
    ProjPoint::from_ints(field, [1, a, b]).expect("leading coordinate is one")
}

fn det3(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Scalar {
    let (a, b, c) = (p.coords(), q.coords(), r.coords());
    let minor = |i: usize, j: usize| &(&b[i] * &c[j]) - &(&b[j] * &c[i]);
    let t0 = &a[0] * &minor(1, 2);
    let t1 = &a[1] * &minor(0, 2);
    let t2 = &a[2] * &minor(0, 1);
    &(&t0 - &t1) + &t2
}

fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(p, q, r).is_zero()
}

fn gen_generic(
    field: FieldSpec,
    m: usize,
    rng: &mut ChaCha20Rng,
) -> Result<PointSet, PointSchemeError> {
    let mut points: Vec<ProjPoint> = Vec::with_capacity(m);
    let budget = 200 + 200 * m as u32;
    let mut draws = 0;
    while points.len() < m {
        if draws >= budget {
            return Err(PointSchemeError::GenerationExhausted { tries: budget });
        }
        draws += 1;
        let cand = random_affine_point(field, rng);
        if points.contains(&cand) {
            continue;
        }
        let makes_line = (0..points.len()).any(|i| {
            (i + 1..points.len()).any(|j| collinear(&cand, &points[i], &points[j]))
        });
        if makes_line {
            continue;
        }
        points.push(cand);
    }
    PointSet::new(field, points)
}

fn gen_collinear_plus(
    field: FieldSpec,
    k: usize,
    extra: usize,
    rng: &mut ChaCha20Rng,
) -> Result<PointSet, PointSchemeError> {
    let budget: u32 = 200 + 200 * (k + extra) as u32;

    // A random line, parametrized through two independent points u, v of
    // its kernel: distinct parameters give distinct points.
    let normal = loop {
        let n: Vec<Scalar> = (0..3).map(|_| field.from_i64(random_coordinate(field, rng))).collect();
        if n.iter().any(|c| !c.is_zero()) {
            break n;
        }
    };
    let line = Matrix::new(field, 1, 3, normal.clone()).expect("one homogeneous row");
    let basis = line.kernel_basis();
    assert_eq!(basis.len(), 2, "a line has a two-dimensional kernel");
    let (u, v) = (&basis[0], &basis[1]);

    let mut points: Vec<ProjPoint> = Vec::with_capacity(k + extra);
    let mut used: Vec<i64> = Vec::with_capacity(k);
    let mut draws = 0;
    while used.len() < k {
        if draws >= budget {
            return Err(PointSchemeError::GenerationExhausted { tries: budget });
        }
        draws += 1;
        let t = random_coordinate(field, rng);
        if used.contains(&t) {
            continue;
        }
        used.push(t);
        let ts = field.from_i64(t);
        let coords: Vec<Scalar> = (0..3).map(|i| &u[i] + &(&ts * &v[i])).collect();
        points.push(ProjPoint::new(coords.try_into().expect("three coordinates"))?);
    }

    let on_line = |p: &ProjPoint| {
        normal
            .iter()
            .zip(p.coords())
            .fold(field.zero(), |acc, (n, c)| &acc + &(n * c))
            .is_zero()
    };
    let mut placed = 0;
    while placed < extra {
        if draws >= budget {
            return Err(PointSchemeError::GenerationExhausted { tries: budget });
        }
        draws += 1;
        let cand = random_affine_point(field, rng);
        if on_line(&cand) || points.contains(&cand) {
            continue;
        }
        // Reject any new collinearity beyond the base line itself.
        let makes_line = (0..points.len()).any(|i| {
            (i + 1..points.len())
                .any(|j| !(i < k && j < k) && collinear(&cand, &points[i], &points[j]))
        });
        if makes_line {
            continue;
        }
        points.push(cand);
        placed += 1;
    }
    PointSet::new(field, points)
}

fn gen_on_curve(
    field: FieldSpec,
    degree: i64,
    m: usize,
    rng: &mut ChaCha20Rng,
) -> Result<PointSet, PointSchemeError> {
    let FieldSpec::Prime(_) = field else {
        return Err(PointSchemeError::PrimeFieldRequired);
    };
    if degree < 1 {
        return Err(PointSchemeError::DegreeTooSmall(degree));
    }
    let plane = plane_points(field)?;
    for _ in 0..CURVE_TRIES {
        let coeffs: Vec<Scalar> = (0..monomial_count(degree))
            .map(|_| field.from_i64(random_coordinate(field, rng)))
            .collect();
        if coeffs.iter().all(Scalar::is_zero) {
            continue;
        }
        let form = CurveForm::new(field, degree, coeffs).expect("nonzero coefficients");
        let smooth_points: Vec<&ProjPoint> = plane
            .iter()
            .filter(|q| {
                form.vanishes_at(q)
                    && form.gradient_at(q.coords()).iter().any(|g| !g.is_zero())
            })
            .collect();
        if smooth_points.len() < m {
            continue;
        }
        let mut picked = rand::seq::index::sample(rng, smooth_points.len(), m).into_vec();
        picked.sort_unstable();
        let chosen: Vec<ProjPoint> =
            picked.into_iter().map(|i| smooth_points[i].clone()).collect();
        return PointSet::new(field, chosen);
    }
    Err(PointSchemeError::GenerationExhausted { tries: CURVE_TRIES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::numerical_character;
    use crate::hilbert::{h0_ideal, sigma};

    #[test]
    fn generic_five_points_have_a_conic_but_no_line() {
        for field in [FieldSpec::prime(101).unwrap(), FieldSpec::rational()] {
            let z = gen_points(PointKind::Generic(5), field, 11).unwrap();
            assert_eq!(z.degree(), 5);
            assert_eq!(sigma(&z).unwrap(), 2, "field {field}");
        }
    }

    #[test]
    fn generic_zero_is_empty() {
        let z = gen_points(PointKind::Generic(0), FieldSpec::rational(), 0).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn collinear_plus_reproduces_the_gap_character() {
        for seed in [0, 1, 2] {
            let z = gen_points(
                PointKind::CollinearPlus(4, 1),
                FieldSpec::prime(101).unwrap(),
                seed,
            )
            .unwrap();
            let ch = numerical_character(&z).unwrap();
            assert_eq!(ch.entries(), &[4, 2], "seed {seed}");
        }
    }

    #[test]
    fn pure_collinear_points_share_their_line() {
        let z = gen_points(PointKind::CollinearPlus(5, 0), FieldSpec::rational(), 9).unwrap();
        assert_eq!(z.degree(), 5);
        assert_eq!(h0_ideal(&z, 1), 1);
        let ch = numerical_character(&z).unwrap();
        assert_eq!(ch.entries(), &[5]);
    }

    #[test]
    fn on_curve_points_lie_on_a_curve_of_that_degree() {
        let field = FieldSpec::prime(101).unwrap();
        let z = gen_points(PointKind::OnCurve(3, 8), field, 4).unwrap();
        assert_eq!(z.degree(), 8);
        assert!(h0_ideal(&z, 3) > 0);
        assert_eq!(
            gen_points(PointKind::OnCurve(3, 5), FieldSpec::rational(), 0),
            Err(PointSchemeError::PrimeFieldRequired)
        );
    }

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let field = FieldSpec::prime(101).unwrap();
        for kind in [
            PointKind::Generic(7),
            PointKind::CollinearPlus(3, 2),
            PointKind::OnCurve(2, 5),
        ] {
            let a = gen_points(kind, field, 123).unwrap();
            let b = gen_points(kind, field, 123).unwrap();
            assert_eq!(a, b);
            let c = gen_points(kind, field, 124).unwrap();
            assert_ne!(a, c, "{kind:?}");
        }
    }
}
