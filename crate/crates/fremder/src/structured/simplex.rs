use num_complex::Complex64;

use crate::error::FremderError;

/// Nonnegative weights summing to one that place the origin inside the convex
/// hull of a planar point set. At most three weights are strictly positive.
#[derive(Debug, Clone)]
pub struct SimplexWeights {
    /// One weight per input point; zeros off the support.
    pub weights: Vec<f64>,
    /// Indices of strictly positive weights.
    pub support: Vec<usize>,
}

impl SimplexWeights {
    fn from_sparse(n: usize, entries: &[(usize, f64)]) -> Self {
        let mut weights = vec![0.0; n];
        let mut support = Vec::new();
        for &(idx, w) in entries {
            if w > 0.0 {
                weights[idx] = w;
                support.push(idx);
            }
        }
        support.sort_unstable();
        SimplexWeights { weights, support }
    }
}

/// Expresses the origin as a convex combination of the given points in the
/// complex plane, or returns `None` when the origin lies outside their convex
/// hull. The support is reduced to at most three points: a vertex hit, a
/// segment through the origin, or a triangle containing it.
pub fn simplex_weights(points: &[Complex64]) -> Result<Option<SimplexWeights>, FremderError> {
    if points.is_empty() {
        return Err(FremderError::EmptyInput);
    }
    if points.iter().any(|p| !p.re.is_finite() || !p.im.is_finite()) {
        return Err(FremderError::NonFinite);
    }
    let n = points.len();
    let scale = points.iter().map(|p| p.norm()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        // Every point is the origin itself.
        return Ok(Some(SimplexWeights::from_sparse(n, &[(0, 1.0)])));
    }
    let point_tol = 1e-12 * scale;

    // Vertices.
    for (j, p) in points.iter().enumerate() {
        if p.norm() <= point_tol {
            return Ok(Some(SimplexWeights::from_sparse(n, &[(j, 1.0)])));
        }
    }

    // Segments: p_j and p_k collinear with the origin, on opposite sides.
    for j in 0..n {
        for k in (j + 1)..n {
            let (p, q) = (points[j], points[k]);
            let cross = p.re * q.im - p.im * q.re;
            let dot = p.re * q.re + p.im * q.im;
            if cross.abs() <= 1e-12 * p.norm() * q.norm() && dot < 0.0 {
                let (np, nq) = (p.norm(), q.norm());
                let wj = nq / (np + nq);
                return Ok(Some(SimplexWeights::from_sparse(
                    n,
                    &[(j, wj), (k, 1.0 - wj)],
                )));
            }
        }
    }

    // Triangles: barycentric coordinates of the origin.
    for j in 0..n {
        for k in (j + 1)..n {
            for l in (k + 1)..n {
                if let Some(w) = barycentric_origin(points[j], points[k], points[l], scale) {
                    return Ok(Some(SimplexWeights::from_sparse(
                        n,
                        &[(j, w[0]), (k, w[1]), (l, w[2])],
                    )));
                }
            }
        }
    }

    Ok(None)
}

/// Solves `w0 p + w1 q + w2 r = 0, w0 + w1 + w2 = 1` and accepts the triangle
/// when all coordinates are nonnegative up to rounding slack.
fn barycentric_origin(p: Complex64, q: Complex64, r: Complex64, scale: f64) -> Option<[f64; 3]> {
    // Signed doubled areas; det is the doubled area of the full triangle.
    let det = (q.re - p.re) * (r.im - p.im) - (q.im - p.im) * (r.re - p.re);
    if det.abs() <= 1e-14 * scale * scale {
        return None;
    }
    // Barycentric coordinate of the origin w.r.t. each vertex: the subtriangle
    // area opposite that vertex over the full area.
    let w0 = (q.re * r.im - q.im * r.re) / det;
    let w1 = (r.re * p.im - r.im * p.re) / det;
    let w2 = (p.re * q.im - p.im * q.re) / det;
    let slack = -1e-12;
    if w0 < slack || w1 < slack || w2 < slack {
        return None;
    }
    let w = [w0.max(0.0), w1.max(0.0), w2.max(0.0)];
    let total: f64 = w.iter().sum();
    Some([w[0] / total, w[1] / total, w[2] / total])
}
