//! Double cones ("diamonds") over spatial balls, their causal hulls, and the
//! interpolation construction that squeezes a third diamond between two
//! nested ones while threading a Cauchy surface through the excision point.
//!
//! All predicates here are closed forms in the ball data. For a diamond
//! with base ball `B(c, r)` at time `t0`:
//!
//! * interior membership: `|y - c| + |t - t0| < r`;
//! * causal hull of the closure: `|y - c| <= r + |t - t0|`;
//! * two closures are causally disjoint iff
//!   `|c1 - c2| > r1 + r2 + |t1 - t2|` (equality is lightlike contact,
//!   which still counts as causal contact).

use crate::error::{ConeError, ModelError, SurfaceError};
use crate::event::{spatial_dist, Event};
use crate::model::{ModelKind, SpacetimeModel};
use crate::surface::{Grid, Regularity, SurfaceExpr, SurfaceFunction};
use crate::tol;

/// Open double cone over the spatial ball `B(center, radius)` in the time
/// slice `t = base_time`. Constructed against a model so that the closure is
/// inside the window and, for an excised model, the whole causal hull stays
/// clear of the removed shadow.
#[derive(Debug, Clone, PartialEq)]
pub struct BallDiamond {
    base_time: f64,
    center: Vec<f64>,
    radius: f64,
}

impl BallDiamond {
    pub fn new(
        model: &SpacetimeModel,
        base_time: f64,
        center: &[f64],
        radius: f64,
    ) -> Result<BallDiamond, ConeError> {
        if !(radius > 0.0) {
            return Err(ConeError::DegenerateRadius(radius));
        }
        if center.len() != model.dim() {
            return Err(ConeError::DimMismatch { got: center.len(), want: model.dim() });
        }
        let w = model.window();
        let inside_time = w.time[0] <= base_time - radius && base_time + radius <= w.time[1];
        let inside_space = center
            .iter()
            .zip(&w.space)
            .all(|(c, s)| s[0] <= c - radius && c + radius <= s[1]);
        if !(inside_time && inside_space) {
            return Err(ConeError::OutOfWindow);
        }
        if let ModelKind::Excised { point } = model.kind() {
            let slack = spatial_dist(center, &point.x) - radius - (base_time - point.t).abs();
            if slack <= 0.0 {
                return Err(ConeError::ShadowOverlap { slack });
            }
        }
        Ok(BallDiamond { base_time, center: center.to_vec(), radius })
    }

    pub fn base_time(&self) -> f64 {
        self.base_time
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Shadow clearance against an excision point: positive iff the closed
    /// causal hull misses the point's full light cone.
    pub fn shadow_slack(&self, point: &Event) -> f64 {
        spatial_dist(&self.center, &point.x) - self.radius - (self.base_time - point.t).abs()
    }

    /// Whether `q` lies in the open diamond. In an excised model any point
    /// of the removed shadow answers `false`; by construction the diamond
    /// cannot meet the shadow anyway, so this is a consistency statement,
    /// not a carve-out.
    pub fn membership(&self, model: &SpacetimeModel, q: &Event) -> Result<bool, ModelError> {
        if q.dim() != model.dim() {
            return Err(ModelError::DimMismatch { got: q.dim(), want: model.dim() });
        }
        if !model.excision_membership(q)? {
            return Ok(false);
        }
        Ok(spatial_dist(&q.x, &self.center) + (q.t - self.base_time).abs() < self.radius)
    }

    /// Whether `q` lies in the closed causal hull of the diamond's closure.
    pub fn causal_hull_contains(&self, q: &Event) -> bool {
        spatial_dist(&q.x, &self.center) <= self.radius + (q.t - self.base_time).abs()
    }

    /// Strict nesting of closures: `closure(self)` inside the open `outer`
    /// with positive margin (the returned value).
    pub fn nesting_margin(&self, outer: &BallDiamond) -> f64 {
        outer.radius
            - (self.radius
                + spatial_dist(&self.center, &outer.center)
                + (self.base_time - outer.base_time).abs())
    }
}

/// Whether the closures of two diamonds are causally disjoint: no causal
/// curve meets both. Lightlike grazing contact counts as contact.
pub fn causally_disjoint_cones(
    model: &SpacetimeModel,
    a: &BallDiamond,
    b: &BallDiamond,
) -> Result<bool, ConeError> {
    if a.center.len() != model.dim() || b.center.len() != model.dim() {
        return Err(ConeError::DimMismatch {
            got: a.center.len().max(b.center.len()),
            want: model.dim(),
        });
    }
    // Both diamonds avoid the excised shadow, so ambient disjointness and
    // excised disjointness coincide (removing points can only erase causal
    // curves, and every ambient causal curve between shadow-free diamonds
    // stays shadow-free; see the restriction argument in the model module).
    let gap = spatial_dist(&a.center, &b.center)
        - a.radius
        - b.radius
        - (a.base_time - b.base_time).abs();
    Ok(gap > 0.0)
}

/// Result of squeezing a diamond between nested ones: the interpolant, the
/// Cauchy surface through the excision point that contains its base, and
/// the measured construction-quality numbers.
#[derive(Debug, Clone)]
pub struct ConeInterpolation {
    pub cone: BallDiamond,
    /// Smooth surface through the excision point whose restriction to the
    /// interpolant's base ball is exactly the base slice (flat at the base
    /// time).
    pub surface: SurfaceFunction,
    /// Largest deviation from the base time over base-ball grid nodes, on
    /// the half-spacing verification grid.
    pub base_flatness: f64,
    /// `1 -` the largest discrete surface gradient on the verification grid.
    pub achronal_margin: f64,
}

/// Builds a diamond strictly between `inner` and `outer` whose base sits on
/// a smooth Cauchy surface through the excision point.
///
/// The interpolant keeps the inner base center, grows the radius by half
/// the nesting gap, and moves its base time toward the excision point's
/// time as far as the gap allows. The surface is a smoothed tent: flat at
/// the base time, with one bump reaching the excision point; flatness on
/// the base ball is exact up to kernel-weight rounding and re-verified at
/// half grid spacing.
pub fn interpolate_cone(
    model: &SpacetimeModel,
    inner: &BallDiamond,
    outer: &BallDiamond,
    grid_h: f64,
) -> Result<ConeInterpolation, ConeError> {
    let p = model.excision_point().ok_or(ModelError::NoExcisionPoint)?;
    let gap = inner.nesting_margin(outer);
    if gap <= 0.0 {
        return Err(ConeError::Surface(SurfaceError::PreconditionNesting(format!(
            "inner diamond closure must sit strictly inside the outer diamond (margin {gap})"
        ))));
    }
    for d in [inner, outer] {
        let slack = d.shadow_slack(p);
        if slack <= 0.0 {
            return Err(ConeError::ShadowOverlap { slack });
        }
    }
    if gap <= grid_h {
        return Err(ConeError::NoRoom { slack: gap, h: grid_h });
    }

    // Base data: centered on the inner diamond, radius up by half the gap,
    // base time clamped toward the excision time with 3/8 of the gap to
    // spend. The triangle inequality then gives the hull of the interpolant
    // at least gap/8 of clearance from the excision point's light cone.
    let reach = 0.375 * gap;
    let t_o = p.t.clamp(inner.base_time - reach, inner.base_time + reach);
    let r_o = inner.radius + 0.5 * gap;
    let cone = BallDiamond::new(model, t_o, &inner.center, r_o)?;
    debug_assert!(inner.nesting_margin(&cone) > 0.0);
    debug_assert!(cone.nesting_margin(outer) > 0.0);
    let kappa = cone.shadow_slack(p);
    debug_assert!(kappa > 0.0);

    let grid = Grid::covering(&model.window().space, grid_h, &p.x);
    let dist = spatial_dist(&p.x, &cone.center);
    let amp = p.t - t_o;

    let base_expr = if amp == 0.0 {
        // The clamp reached the excision time: the flat slice already passes
        // through the excision point (which sits outside the base ball).
        SurfaceExpr::Level(t_o)
    } else {
        // Tent sloped so its excursion dies out kappa/2 before the base
        // ball; the shadow-clearance inequality keeps the slope below 1.
        let slope = amp.abs() / (dist - r_o - 0.5 * kappa);
        SurfaceExpr::Tent { base_t: t_o, apex_t: p.t, apex_y: p.x.clone(), slope }
    };

    let margin_cap = 1.0 - tol::SPACELIKE_MARGIN;
    let mut width = 0.125 * kappa;
    let mut last: Option<(SurfaceFunction, f64, f64)> = None;
    for _ in 0..12 {
        let expr = match &base_expr {
            SurfaceExpr::Level(t) => SurfaceExpr::Level(*t),
            tent => SurfaceExpr::Pin {
                inner: Box::new(SurfaceExpr::Mollify {
                    inner: Box::new(tent.clone()),
                    width,
                    taps: tol::KERNEL_CELLS,
                }),
                at: p.x.clone(),
                value: p.t,
                radius: 0.5 * kappa,
            },
        };
        let surface = SurfaceFunction::from_expr(grid.clone(), expr, Regularity::Smooth);
        let fine = surface.resampled(2);
        let mut flat = 0.0f64;
        for i in 0..fine.grid().len() {
            let y = fine.grid().node(i);
            if spatial_dist(&y, &cone.center) <= r_o {
                flat = flat.max((fine.values()[i] - t_o).abs());
            }
        }
        let grad = fine.max_discrete_gradient().0;
        let margin = 1.0 - grad;
        if flat <= tol::SURFACE_MEMBERSHIP && grad <= margin_cap && fine.eval(&p.x) == p.t {
            return Ok(ConeInterpolation {
                cone,
                surface,
                base_flatness: flat,
                achronal_margin: margin,
            });
        }
        last = Some((surface, flat, margin));
        if matches!(base_expr, SurfaceExpr::Level(_)) {
            break;
        }
        width *= 0.5;
    }
    let (_, flat, _) = last.expect("at least one construction attempt runs");
    Err(ConeError::Surface(SurfaceError::ToleranceUnachievable {
        needed: tol::SURFACE_MEMBERSHIP,
        achieved: flat,
    }))
}
