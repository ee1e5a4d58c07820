use crate::curve::CurveForm;
use crate::error::PointSchemeError;
use crate::hilbert::ideal_basis;
use crate::points::{plane_points, PointSet, ProjPoint};
use exact_linalg::{FieldSpec, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

/// Outcome of the two-stage generation test for the degree-n curves through
/// a point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GgVerdict {
    /// Local generation holds at every point of Z and the exhaustive scan of
    /// the rational plane found no base point outside Z.
    Generated,
    /// At this point of Z the curves through Z fail to cut it out
    /// transversally (stacked gradients have rank < 2).
    NotGeneratedLocal(ProjPoint),
    /// A rational point outside Z where every curve through Z also vanishes.
    BasePointFound(ProjPoint),
    /// Over the rationals only random probes are possible; none of them hit
    /// a base point. Weaker than `Generated` by design.
    NoRationalObstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GgReport {
    pub verdict: GgVerdict,
    /// Dimension of the space of degree-n curves through Z.
    pub section_count: usize,
    /// Rational points examined in the base-locus stage.
    pub points_scanned: usize,
}

impl GgReport {
    pub fn is_generated(&self) -> bool {
        self.verdict == GgVerdict::Generated
    }
}

const DEFAULT_RATIONAL_PROBES: usize = 200;
const PROBE_COORDINATE_BOUND: i64 = 30;

/// Tests whether the degree-`n` curves through `z` generate its ideal.
///
/// Stage one checks generation at each point of `z` (gradients of a kernel
/// basis must span the cotangent plane). Stage two hunts for base points
/// away from `z`: exhaustively over a prime field, by seeded bounded probing
/// over the rationals (seed 0 here; see [`is_gg_seeded`]).
pub fn is_gg(z: &PointSet, n: i64) -> Result<GgReport, PointSchemeError> {
    is_gg_seeded(z, n, 0, DEFAULT_RATIONAL_PROBES)
}

/// [`is_gg`] with explicit probe seed and count for the rational case; both
/// parameters are ignored over prime fields, where the scan is exhaustive.
pub fn is_gg_seeded(
    z: &PointSet,
    n: i64,
    seed: u64,
    probes: usize,
) -> Result<GgReport, PointSchemeError> {
    if z.is_empty() {
        return Err(PointSchemeError::EmptyPointSet);
    }
    if n < 1 {
        return Err(PointSchemeError::DegreeTooSmall(n));
    }
    let kernel = ideal_basis(z, n)?;
    if kernel.is_empty() {
        return Err(PointSchemeError::NoSections { degree: n });
    }
    let sections: Vec<CurveForm> = kernel
        .into_iter()
        .map(|coeffs| CurveForm::new(z.field(), n, coeffs).expect("kernel vectors are nonzero"))
        .collect();

    for p in z.points() {
        if !locally_generated_at(z.field(), &sections, p) {
            return Ok(GgReport {
                verdict: GgVerdict::NotGeneratedLocal(p.clone()),
                section_count: sections.len(),
                points_scanned: 0,
            });
        }
    }

    match z.field() {
        FieldSpec::Prime(_) => {
            let mut scanned = 0;
            for q in plane_points(z.field())? {
                if z.contains(&q) {
                    continue;
                }
                scanned += 1;
                if is_base_point(&sections, &q) {
                    return Ok(GgReport {
                        verdict: GgVerdict::BasePointFound(q),
                        section_count: sections.len(),
                        points_scanned: scanned,
                    });
                }
            }
            Ok(GgReport {
                verdict: GgVerdict::Generated,
                section_count: sections.len(),
                points_scanned: scanned,
            })
        }
        FieldSpec::Rational => {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let mut scanned = 0;
            while scanned < probes {
                let coords = [
                    rng.gen_range(-PROBE_COORDINATE_BOUND..=PROBE_COORDINATE_BOUND),
                    rng.gen_range(-PROBE_COORDINATE_BOUND..=PROBE_COORDINATE_BOUND),
                    rng.gen_range(-PROBE_COORDINATE_BOUND..=PROBE_COORDINATE_BOUND),
                ];
                if coords == [0, 0, 0] {
                    continue;
                }
                let q = ProjPoint::from_ints(z.field(), coords)?;
                if z.contains(&q) {
                    continue;
                }
                scanned += 1;
                if is_base_point(&sections, &q) {
                    return Ok(GgReport {
                        verdict: GgVerdict::BasePointFound(q),
                        section_count: sections.len(),
                        points_scanned: scanned,
                    });
                }
            }
            Ok(GgReport {
                verdict: GgVerdict::NoRationalObstruction,
                section_count: sections.len(),
                points_scanned: scanned,
            })
        }
    }
}

/// Generation at a single reduced point: in the affine chart where p is
/// finite, the gradients of the sections stacked into a k×2 matrix must have
/// rank 2 (the sections then cut out the maximal ideal at p).
fn locally_generated_at(field: FieldSpec, sections: &[CurveForm], p: &ProjPoint) -> bool {
    let chart = p.chart_index();
    let axes: Vec<usize> = (0..3).filter(|&a| a != chart).collect();
    let mut entries: Vec<Scalar> = Vec::with_capacity(sections.len() * 2);
    for section in sections {
        let grad = section.gradient_at(p.coords());
        for &axis in &axes {
            entries.push(grad[axis].clone());
        }
    }
    let stacked = Matrix::new(field, sections.len(), 2, entries).expect("homogeneous entries");
    stacked.rank() == 2
}

/// A base point is one where every section vanishes.
fn is_base_point(sections: &[CurveForm], q: &ProjPoint) -> bool {
    sections.iter().all(|s| s.vanishes_at(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_is_generated_by_lines() {
        let f = FieldSpec::prime(7).unwrap();
        let z = PointSet::from_ints(f, &[[1, 2, 3]]).unwrap();
        let report = is_gg(&z, 1).unwrap();
        assert_eq!(report.verdict, GgVerdict::Generated);
        assert_eq!(report.section_count, 2);
        assert_eq!(report.points_scanned, 7 * 7 + 7); // all but the point itself
    }

    #[test]
    fn collinear_points_are_not_generated() {
        let f = FieldSpec::prime(7).unwrap();
        let z = PointSet::from_ints(f, &[[1, 0, 0], [1, 1, 0], [1, 2, 0]]).unwrap();
        let report = is_gg(&z, 1).unwrap();
        // The only section is the common line: gradients have rank 1 already
        // at the first point.
        assert_eq!(
            report.verdict,
            GgVerdict::NotGeneratedLocal(z.points()[0].clone())
        );
        assert_eq!(report.section_count, 1);
    }

    #[test]
    fn degenerate_inputs_error() {
        let f = FieldSpec::prime(7).unwrap();
        let z = PointSet::from_ints(f, &[[1, 2, 3]]).unwrap();
        assert_eq!(is_gg(&z, 0), Err(PointSchemeError::DegreeTooSmall(0)));
        let empty = PointSet::new(f, vec![]).unwrap();
        assert_eq!(is_gg(&empty, 1), Err(PointSchemeError::EmptyPointSet));
        // Five generic points admit no line at all.
        let five = PointSet::from_ints(
            f,
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]],
        )
        .unwrap();
        assert_eq!(is_gg(&five, 1), Err(PointSchemeError::NoSections { degree: 1 }));
    }

    #[test]
    fn rational_probing_is_deterministic_and_weak() {
        let q = FieldSpec::rational();
        let z = PointSet::from_ints(q, &[[1, 2, 3]]).unwrap();
        let a = is_gg(&z, 1).unwrap();
        let b = is_gg(&z, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.verdict, GgVerdict::NoRationalObstruction);
        assert_eq!(a.points_scanned, DEFAULT_RATIONAL_PROBES);
    }

    #[test]
    fn eight_of_nine_grid_points_leave_a_base_point() {
        // F = product of lines y = ax, G = product of lines z = bx, for
        // a, b in {0,1,2}: a transverse 3x3 grid of nine points [1:a:b].
        // Every cubic through eight of them lies in the pencil <F, G> and
        // so vanishes at the ninth too: the local test passes everywhere
        // but the scan must find the missing point.
        let f = FieldSpec::prime(7).unwrap();
        let grid: Vec<[i64; 3]> = (0..3)
            .flat_map(|a| (0..3).map(move |b| [1, a, b]))
            .collect();
        let z = PointSet::from_ints(f, &grid[..8]).unwrap();
        let report = is_gg(&z, 3).unwrap();
        assert_eq!(report.section_count, 2);
        let missing = ProjPoint::from_ints(f, [1, 2, 2]).unwrap();
        assert_eq!(report.verdict, GgVerdict::BasePointFound(missing));
    }
}
