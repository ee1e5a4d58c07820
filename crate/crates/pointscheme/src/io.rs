use crate::error::PointSchemeError;
use crate::points::{PointSet, ProjPoint};
use exact_linalg::FieldSpec;
use serde::{Deserialize, Serialize};

/// On-disk shape of a point-set document: a field tag plus coordinate
/// strings (decimal integers or `num/den` fractions).
#[derive(Serialize, Deserialize)]
struct PointSetFile {
    field: FieldTag,
    points: Vec<[String; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FieldTag {
    Prime(u64),
    Rational,
}

/// Parses a point-set document. Coordinates are normalized on load;
/// duplicate points (after normalization) are an error, as are invalid
/// primes and unparsable coordinates.
pub fn load_point_set(text: &str) -> Result<PointSet, PointSchemeError> {
    let file: PointSetFile =
        serde_json::from_str(text).map_err(|e| PointSchemeError::BadFile(e.to_string()))?;
    let field = match file.field {
        FieldTag::Prime(p) => FieldSpec::prime(p)?,
        FieldTag::Rational => FieldSpec::rational(),
    };
    let mut points = Vec::with_capacity(file.points.len());
    for triple in &file.points {
        let mut coords = Vec::with_capacity(3);
        for s in triple {
            coords.push(field.parse_scalar(s)?);
        }
        points.push(ProjPoint::new(coords.try_into().expect("three coordinates"))?);
    }
    PointSet::new(field, points)
}

/// Serializes a point set in the same document format (normalized
/// coordinates, exact strings). `load_point_set` inverts it.
pub fn save_point_set(z: &PointSet) -> String {
    let file = PointSetFile {
        field: match z.field() {
            FieldSpec::Prime(p) => FieldTag::Prime(p),
            FieldSpec::Rational => FieldTag::Rational,
        },
        points: z
            .points()
            .iter()
            .map(|p| {
                let c = p.coords();
                [c[0].to_string(), c[1].to_string(), c[2].to_string()]
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}
