use crate::error::PointSchemeError;
use exact_linalg::{FieldSpec, Scalar};
use serde::Serialize;
use std::fmt;

/// A point of the projective plane in canonical form: the first nonzero
/// coordinate is normalized to 1, so coordinate equality is point equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProjPoint {
    coords: [Scalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [Scalar; 3]) -> Result<ProjPoint, PointSchemeError> {
        let Some(first) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(PointSchemeError::ZeroPoint);
        };
        let inv = coords[first].inv();
        let normalized: Vec<Scalar> = coords.iter().map(|c| &inv * c).collect();
        Ok(ProjPoint {
            coords: normalized.try_into().expect("three coordinates"),
        })
    }

    pub fn from_ints(field: FieldSpec, coords: [i64; 3]) -> Result<ProjPoint, PointSchemeError> {
        ProjPoint::new(coords.map(|n| field.from_i64(n)))
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    /// Index of the normalized (leading 1) coordinate: the affine chart in
    /// which this point is finite.
    pub fn chart_index(&self) -> usize {
        self.coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("a projective point has a nonzero coordinate")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// An ordered reduced set of distinct plane points over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    field: FieldSpec,
    points: Vec<ProjPoint>,
}

impl PointSet {
    /// Builds a set, rejecting points from the wrong field and duplicates
    /// (the reported index is the position of the repeated occurrence).
    pub fn new(field: FieldSpec, points: Vec<ProjPoint>) -> Result<PointSet, PointSchemeError> {
        for (index, p) in points.iter().enumerate() {
            if p.coords.iter().any(|c| !field.owns(c)) {
                return Err(PointSchemeError::FieldMismatch);
            }
            if points[..index].contains(p) {
                return Err(PointSchemeError::DuplicatePoint { index });
            }
        }
        Ok(PointSet { field, points })
    }

    pub fn from_ints(field: FieldSpec, coords: &[[i64; 3]]) -> Result<PointSet, PointSchemeError> {
        let points = coords
            .iter()
            .map(|&c| ProjPoint::from_ints(field, c))
            .collect::<Result<Vec<_>, _>>()?;
        PointSet::new(field, points)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Degree of the reduced scheme: the number of points.
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.contains(p)
    }

    /// The set with the point at `index` removed, order preserved.
    pub fn without_index(&self, index: usize) -> PointSet {
        let mut points = self.points.clone();
        points.remove(index);
        PointSet {
            field: self.field,
            points,
        }
    }

    /// Set difference `self minus other`, order preserved.
    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet {
            field: self.field,
            points: self
                .points
                .iter()
                .filter(|p| !other.contains(p))
                .cloned()
                .collect(),
        }
    }
}

/// All p² + p + 1 rational points of the plane over F_p, in increasing
/// lexicographic order of their normalized coordinate triples:
/// [0:0:1], then [0:1:b], then [1:a:b].
pub fn plane_points(field: FieldSpec) -> Result<Vec<ProjPoint>, PointSchemeError> {
    let FieldSpec::Prime(p) = field else {
        return Err(PointSchemeError::PrimeFieldRequired);
    };
    let p = p as i64;
    let mut points = Vec::with_capacity((p * p + p + 1) as usize);
    let mk = |coords: [i64; 3]| {
        ProjPoint::from_ints(field, coords).expect("coordinates are not all zero")
    };
    points.push(mk([0, 0, 1]));
    for b in 0..p {
        points.push(mk([0, 1, b]));
    }
    for a in 0..p {
        for b in 0..p {
            points.push(mk([1, a, b]));
        }
    }
    Ok(points)
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_canonical() {
        let f = FieldSpec::prime(7).unwrap();
        let p = ProjPoint::from_ints(f, [2, 4, 6]).unwrap();
        let q = ProjPoint::from_ints(f, [1, 2, 3]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "[1:2:3]");
        assert_eq!(p.chart_index(), 0);

        let r = ProjPoint::from_ints(f, [0, 3, 5]).unwrap();
        assert_eq!(r.to_string(), "[0:1:4]"); // 5/3 = 5*5 = 25 = 4 mod 7
        assert_eq!(r.chart_index(), 1);
    }

    #[test]
    fn rational_points_normalize_to_fractions() {
        let q = FieldSpec::rational();
        let p = ProjPoint::from_ints(q, [2, 3, 5]).unwrap();
        assert_eq!(p.to_string(), "[1:3/2:5/2]");
    }

    #[test]
    fn zero_point_is_rejected() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(
            ProjPoint::from_ints(f, [0, 0, 0]),
            Err(PointSchemeError::ZeroPoint)
        );
    }

    #[test]
    fn duplicates_are_rejected_with_position() {
        let f = FieldSpec::prime(7).unwrap();
        // [2:4:6] normalizes to [1:2:3]: a hidden duplicate.
        let err = PointSet::from_ints(f, &[[1, 2, 3], [0, 1, 1], [2, 4, 6]]).unwrap_err();
        assert_eq!(err, PointSchemeError::DuplicatePoint { index: 2 });
    }

    #[test]
    fn plane_enumeration_is_complete_and_sorted() {
        let f = FieldSpec::prime(5).unwrap();
        let pts = plane_points(f).unwrap();
        assert_eq!(pts.len(), 31); // 25 + 5 + 1
        for w in pts.windows(2) {
            let key = |p: &ProjPoint| -> Vec<u64> {
                p.coords().iter().map(|c| c.as_residue().unwrap()).collect()
            };
            assert!(key(&w[0]) < key(&w[1]));
        }
        assert_eq!(plane_points(FieldSpec::rational()), Err(PointSchemeError::PrimeFieldRequired));
    }

    #[test]
    fn set_difference_preserves_order() {
        let f = FieldSpec::prime(7).unwrap();
        let x = PointSet::from_ints(f, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap();
        let z = PointSet::from_ints(f, &[[0, 1, 0], [1, 1, 1]]).unwrap();
        let y = x.difference(&z);
        assert_eq!(y.degree(), 2);
        assert_eq!(y.points()[0].to_string(), "[1:0:0]");
        assert_eq!(y.points()[1].to_string(), "[0:0:1]");
    }
}
