use serde::{Deserialize, Serialize};

use crate::rational::{format_rational, parse_rational};
use crate::sphere::{plane_from_geometry, sphere_from_geometry, Sphere};
use crate::{InversiveError, Result};

/// External JSON form of a sphere or plane. Rationals travel as bit-exact
/// `"num/den"` strings, so round trips are lossless:
///
/// ```json
/// {"type":"sphere","curvature":"2","center":["0","0","-1/2"]}
/// {"type":"plane","normal":["0","0","1"],"offset":"1"}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GeometryObject {
    /// A sphere given by curvature (nonzero, negative for enclosing) and
    /// center.
    Sphere {
        /// Exact curvature as `"num/den"`.
        curvature: String,
        /// Exact center coordinates as `"num/den"` strings.
        center: [String; 3],
    },
    /// A plane given by exact unit normal and signed offset.
    Plane {
        /// Exact unit normal as `"num/den"` strings.
        normal: [String; 3],
        /// Exact signed offset as `"num/den"`.
        offset: String,
    },
}

impl GeometryObject {
    /// Converts a validated sphere into its external form.
    pub fn from_sphere(s: &Sphere) -> GeometryObject {
        if s.is_plane() {
            let normal = s.normal().expect("plane has a normal");
            GeometryObject::Plane {
                normal: std::array::from_fn(|i| format_rational(&normal[i])),
                offset: format_rational(&s.offset().expect("plane has an offset")),
            }
        } else {
            let center = s.center().expect("sphere has a center");
            GeometryObject::Sphere {
                curvature: format_rational(s.curvature()),
                center: std::array::from_fn(|i| format_rational(&center[i])),
            }
        }
    }

    /// Parses and validates into a [`Sphere`] (exact-rational).
    pub fn to_sphere(&self) -> Result<Sphere> {
        match self {
            GeometryObject::Sphere { curvature, center } => {
                let curv = parse_rational(curvature)?;
                let c = [
                    parse_rational(&center[0])?,
                    parse_rational(&center[1])?,
                    parse_rational(&center[2])?,
                ];
                sphere_from_geometry(&c, &curv)
            }
            GeometryObject::Plane { normal, offset } => {
                let n = [
                    parse_rational(&normal[0])?,
                    parse_rational(&normal[1])?,
                    parse_rational(&normal[2])?,
                ];
                plane_from_geometry(&n, &parse_rational(offset)?)
            }
        }
    }

    /// Parses a JSON array of geometry objects into spheres.
    pub fn parse_list(json: &str) -> Result<Vec<Sphere>> {
        let objects: Vec<GeometryObject> =
            serde_json::from_str(json).map_err(|e| InversiveError::JsonInvalid {
                reason: e.to_string(),
            })?;
        objects.iter().map(|o| o.to_sphere()).collect()
    }

    /// Serializes spheres to the external JSON list form.
    pub fn render_list(spheres: &[Sphere]) -> String {
        let objects: Vec<GeometryObject> =
            spheres.iter().map(GeometryObject::from_sphere).collect();
        serde_json::to_string_pretty(&objects).expect("string-only structure always serializes")
    }
}
