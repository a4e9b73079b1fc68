//! Gnomonic projection `g_u(v) = v/(u.v) - u` from the open hemisphere at `u`
//! onto the hyperplane `u^perp`.
//!
//! Plane values are expressed in the chart's own orthonormal basis
//! (dimension n), never in ambient coordinates. The basis is Gram-Schmidt on
//! `[u, e_1, ..., e_{n+1}]` with `u` dropped, so it is reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, GeomError, Result};
use crate::euclid::{ConvexPolytope, SubspaceBasis};
use crate::linalg::{basis_vector, check_unit, gram_schmidt, Vector};
use crate::sphere::{make_body, sph_support, SpherePolytope, Subsphere};

/// Points with `u.v` at or below this are outside the chart.
pub const CHART_EPS: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct HemisphereChart {
    u: Vector,
    plane_basis: Vec<Vector>,
}

impl HemisphereChart {
    pub fn new(u: &Vector) -> Result<Self> {
        check_unit(u)?;
        let dim = u.len();
        let seeds: Vec<Vector> = (0..dim).map(|k| basis_vector(dim, k)).collect();
        let all = gram_schmidt(std::iter::once(u).chain(seeds.iter()), 1e-8);
        let plane_basis: Vec<Vector> = all.into_iter().skip(1).collect();
        debug_assert_eq!(plane_basis.len(), dim - 1);
        Ok(Self {
            u: u.clone(),
            plane_basis,
        })
    }

    pub fn center(&self) -> &Vector {
        &self.u
    }

    pub fn plane_basis(&self) -> &[Vector] {
        &self.plane_basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.u.len()
    }

    pub fn plane_dim(&self) -> usize {
        self.plane_basis.len()
    }

    /// Plane coordinates of an ambient vector (its component orthogonal to u).
    pub fn coords(&self, x: &Vector) -> Vector {
        Vector::from_iterator(
            self.plane_basis.len(),
            self.plane_basis.iter().map(|b| b.dot(x)),
        )
    }

    /// Ambient vector in `u^perp` with the given plane coordinates.
    pub fn embed(&self, c: &Vector) -> Vector {
        let mut x = Vector::zeros(self.u.len());
        for (b, ci) in self.plane_basis.iter().zip(c.iter()) {
            x.axpy(*ci, b, 1.0);
        }
        x
    }

    pub fn gproj(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.u.len(), v.len())?;
        let dot = self.u.dot(v);
        if !(dot > CHART_EPS) {
            return Err(GeomError::OutOfChart { dot });
        }
        // basis vectors are orthogonal to u, so the `- u` term drops out
        Ok(self.coords(v) / dot)
    }

    pub fn gproj_inv(&self, x: &Vector) -> Result<Vector> {
        check_dim(self.plane_basis.len(), x.len())?;
        let y = self.embed(x) + &self.u;
        let n = y.norm();
        Ok(y / n)
    }

    pub fn to_record(&self) -> ChartRecord {
        ChartRecord {
            u: self.u.iter().copied().collect(),
            basis: self
                .plane_basis
                .iter()
                .map(|b| b.iter().copied().collect())
                .collect(),
        }
    }
}

/// Serialized chart: `{"u":[...],"basis":[[...],...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartRecord {
    pub u: Vec<f64>,
    pub basis: Vec<Vec<f64>>,
}

pub fn gproj(chart: &HemisphereChart, v: &Vector) -> Result<Vector> {
    chart.gproj(v)
}

pub fn gproj_inv(chart: &HemisphereChart, x: &Vector) -> Result<Vector> {
    chart.gproj_inv(x)
}

/// Image of a spherical body in the chart plane.
pub fn map_body(chart: &HemisphereChart, k: &SpherePolytope) -> Result<ConvexPolytope> {
    check_dim(chart.ambient_dim(), k.ambient_dim())?;
    let pts = k
        .generators()
        .iter()
        .map(|g| chart.gproj(g))
        .collect::<Result<Vec<_>>>()?;
    ConvexPolytope::new(pts)
}

/// Preimage of a Euclidean body; geodesics map to lines, so generators map
/// to generators.
pub fn map_body_inv(chart: &HemisphereChart, p: &ConvexPolytope) -> Result<SpherePolytope> {
    check_dim(chart.plane_dim(), p.dim())?;
    let pts = p
        .vertices()
        .iter()
        .map(|x| chart.gproj_inv(x))
        .collect::<Result<Vec<_>>>()?;
    make_body(pts)
}

/// The subspace `span(S) cap u^perp`, in plane coordinates. Requires `u` in `S`.
pub fn subsphere_to_subspace(chart: &HemisphereChart, s: &Subsphere) -> Result<SubspaceBasis> {
    check_dim(chart.ambient_dim(), s.ambient_dim())?;
    let u = chart.center();
    let residual = (u - s.project(u)).norm();
    if residual > 1e-10 {
        return Err(GeomError::Precondition(format!(
            "chart center not in subsphere (residual {residual:e})"
        )));
    }
    let in_plane: Vec<Vector> = s
        .basis()
        .iter()
        .map(|b| chart.coords(b))
        .collect();
    let basis = gram_schmidt(in_plane.iter(), 1e-8);
    let v = SubspaceBasis::new(chart.plane_dim(), basis)?;
    debug_assert_eq!(v.dim() + 1, s.dim());
    Ok(v)
}

/// Both sides of `h(g_u(K), v) = tan h_u(K, v)`, computed independently:
/// the Euclidean support of the mapped body, and the tangent of the
/// definitional spherical support.
pub fn support_bridge(chart: &HemisphereChart, k: &SpherePolytope, v: &Vector) -> Result<(f64, f64)> {
    let euclid = map_body(chart, k)?.support(&chart.coords(v))?;
    let spherical = sph_support(chart.center(), k, v)?.tan();
    Ok((euclid, spherical))
}
