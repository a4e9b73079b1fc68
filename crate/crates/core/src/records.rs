//! JSON records for bodies and sampled radial maps.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::euclid::ConvexPolytope;
use crate::linalg::Vector;
use crate::sphere::{make_body, SpherePolytope};
use crate::star::{RadialMap, SphStarMap};

/// A body or sampled radial map, tagged by its space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "lowercase")]
pub enum BodyRecord {
    Euclid {
        dim: usize,
        vertices: Vec<Vec<f64>>,
    },
    Sphere {
        ambient_dim: usize,
        generators: Vec<Vec<f64>>,
        center: Vec<f64>,
    },
    Radial {
        dim: usize,
        grid: Vec<Vec<f64>>,
        values: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        u: Option<Vec<f64>>,
    },
}

fn rows(vs: &[Vector]) -> Vec<Vec<f64>> {
    vs.iter().map(|v| v.iter().copied().collect()).collect()
}

fn vectors(rows: &[Vec<f64>], dim: usize) -> Result<Vec<Vector>> {
    rows.iter()
        .map(|r| {
            if r.len() != dim {
                return Err(GeomError::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            Ok(Vector::from_column_slice(r))
        })
        .collect()
}

impl BodyRecord {
    pub fn space(&self) -> &'static str {
        match self {
            BodyRecord::Euclid { .. } => "euclid",
            BodyRecord::Sphere { .. } => "sphere",
            BodyRecord::Radial { .. } => "radial",
        }
    }

    pub fn from_euclid(k: &ConvexPolytope) -> Self {
        BodyRecord::Euclid {
            dim: k.dim(),
            vertices: rows(k.vertices()),
        }
    }

    pub fn from_sphere(k: &SpherePolytope) -> Self {
        BodyRecord::Sphere {
            ambient_dim: k.ambient_dim(),
            generators: rows(k.generators()),
            center: k.center().iter().copied().collect(),
        }
    }

    /// Requires a table-backed map.
    pub fn from_radial(r: &RadialMap) -> Result<Self> {
        let (grid, values) = r
            .samples()
            .ok_or_else(|| GeomError::InvalidParam("radial map has no sample table".into()))?;
        Ok(BodyRecord::Radial {
            dim: r.dim(),
            grid: rows(grid),
            values: values.to_vec(),
            u: None,
        })
    }

    /// Samples a spherical star map on ambient directions of `S_u`.
    pub fn from_sph_star(s: &SphStarMap, grid: &[Vector]) -> Result<Self> {
        let values = grid.iter().map(|v| s.value(v)).collect::<Result<Vec<_>>>()?;
        Ok(BodyRecord::Radial {
            dim: s.ambient_dim(),
            grid: rows(grid),
            values,
            u: Some(s.u().iter().copied().collect()),
        })
    }

    pub fn to_euclid(&self) -> Result<ConvexPolytope> {
        match self {
            BodyRecord::Euclid { dim, vertices } => ConvexPolytope::new(vectors(vertices, *dim)?),
            other => Err(wrong_space("euclid", other)),
        }
    }

    /// Rebuilds the body; the stored center is kept when it still certifies.
    pub fn to_sphere(&self) -> Result<SpherePolytope> {
        match self {
            BodyRecord::Sphere {
                ambient_dim,
                generators,
                center,
            } => {
                let body = make_body(vectors(generators, *ambient_dim)?)?;
                let c = vectors(std::slice::from_ref(center), *ambient_dim)?.remove(0);
                Ok(body.with_center(&c).unwrap_or(body))
            }
            other => Err(wrong_space("sphere", other)),
        }
    }

    pub fn to_radial(&self) -> Result<RadialMap> {
        match self {
            BodyRecord::Radial { dim, grid, values, u: None } => {
                RadialMap::from_samples(vectors(grid, *dim)?, values.clone())
            }
            BodyRecord::Radial { u: Some(_), .. } => Err(GeomError::InvalidParam(
                "spherical radial record where a Euclidean one was expected".into(),
            )),
            other => Err(wrong_space("radial", other)),
        }
    }

    /// Spherical star map from a table; off-grid directions use the nearest
    /// grid direction.
    pub fn to_sph_star(&self) -> Result<SphStarMap> {
        match self {
            BodyRecord::Radial {
                dim,
                grid,
                values,
                u: Some(u),
            } => {
                let u = Vector::from_column_slice(u);
                let table = RadialMap::from_samples(vectors(grid, *dim)?, values.clone())?;
                SphStarMap::from_fn(&u, move |v| table.radial(v).unwrap_or(0.0))
            }
            other => Err(wrong_space("radial (with u)", other)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| GeomError::InvalidParam(format!("bad record: {e}")))
    }
}

fn wrong_space(expected: &str, got: &BodyRecord) -> GeomError {
    GeomError::InvalidParam(format!("expected a {expected} record, got {}", got.space()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{direction_grid, vector};

    #[test]
    fn euclid_round_trip() {
        let cube = ConvexPolytope::unit_cube(3);
        let rec = BodyRecord::from_euclid(&cube);
        let json = rec.to_json();
        assert!(json.contains("\"space\": \"euclid\""));
        let back = BodyRecord::from_json(&json).unwrap().to_euclid().unwrap();
        assert_eq!(back, cube);
    }

    #[test]
    fn sphere_round_trip_keeps_center() {
        let k = make_body(vec![vector(&[1.0, 0.1, 0.2]), vector(&[0.2, 1.0, 0.1]), vector(&[0.1, 0.3, 1.0])]).unwrap();
        let json = BodyRecord::from_sphere(&k).to_json();
        let back = BodyRecord::from_json(&json).unwrap().to_sphere().unwrap();
        assert_eq!(back, k);
        assert!(BodyRecord::from_json(&json).unwrap().to_euclid().is_err());
    }

    #[test]
    fn radial_round_trip() {
        let grid = direction_grid(2, 16);
        let r = RadialMap::ball(2, 1.0).sampled(grid).unwrap();
        let rec = BodyRecord::from_radial(&r).unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(!json.contains("\"u\""));
        let back = BodyRecord::from_json(&json).unwrap().to_radial().unwrap();
        assert_eq!(back.samples().unwrap().1, vec![1.0; 16].as_slice());
    }

    #[test]
    fn spherical_radial_carries_u() {
        let u = vector(&[0.0, 0.0, 1.0]);
        let cap = SphStarMap::cap(&u, 0.3).unwrap();
        let grid = crate::sphere::equator_directions(&u, 12).unwrap();
        let rec = BodyRecord::from_sph_star(&cap, &grid).unwrap();
        let json = rec.to_json();
        assert!(json.contains("\"u\""));
        let back = BodyRecord::from_json(&json).unwrap().to_sph_star().unwrap();
        assert_eq!(back.value(&grid[3]).unwrap(), 0.3);
    }
}
