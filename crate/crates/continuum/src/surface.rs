//! Grid-sampled Cauchy surfaces over the spatial box, and the constructive
//! deformation that pushes a surface through a marked point while keeping it
//! spacelike.
//!
//! A surface is a graph `t = tau(y)` over the window's spatial box. It
//! carries a uniform grid of samples plus an exact expression tree, so the
//! same surface can be re-evaluated on a finer grid (the verification
//! suites re-check every postcondition at half spacing). Smoothing is done
//! by averaging translates against a compactly supported bump kernel, which
//! preserves every Lipschitz bound exactly; pinning adds a compactly
//! supported bump that fixes the value at one grid node without touching
//! the surface outside the bump's support.

use crate::error::SurfaceError;
use crate::event::{spatial_dist, Event};
use crate::tol;

/// Uniform lattice over a spatial box. Every axis passes exactly through an
/// anchor point, so the anchor node's coordinates are reproduced without
/// rounding at every refinement level.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    h: f64,
    anchor: Vec<f64>,
    k_min: Vec<i64>,
    shape: Vec<usize>,
    axes: Vec<Vec<f64>>,
}

impl Grid {
    /// Lattice of spacing `h` anchored at `anchor`, covering `space` (one
    /// `[lo, hi]` pair per axis).
    pub fn covering(space: &[[f64; 2]], h: f64, anchor: &[f64]) -> Grid {
        assert!(h > 0.0, "grid spacing must be positive");
        assert_eq!(space.len(), anchor.len());
        let slack = 1e-9;
        let mut k_min = Vec::new();
        let mut shape = Vec::new();
        let mut axes = Vec::new();
        for (a, s) in space.iter().enumerate() {
            let lo = ((s[0] - anchor[a]) / h - slack).ceil() as i64;
            let hi = ((s[1] - anchor[a]) / h + slack).floor() as i64;
            assert!(hi >= lo, "grid does not meet the box on axis {a}");
            let coords: Vec<f64> = (lo..=hi)
                .map(|k| if k == 0 { anchor[a] } else { anchor[a] + k as f64 * h })
                .collect();
            k_min.push(lo);
            shape.push(coords.len());
            axes.push(coords);
        }
        Grid { h, anchor: anchor.to_vec(), k_min, shape, axes }
    }

    /// Same anchor and extent, spacing divided by `factor`.
    pub fn refined(&self, factor: u32) -> Grid {
        let f = factor as i64;
        let h = self.h / factor as f64;
        let mut k_min = Vec::new();
        let mut shape = Vec::new();
        let mut axes = Vec::new();
        for a in 0..self.dim() {
            let lo = self.k_min[a] * f;
            let hi = (self.k_min[a] + self.shape[a] as i64 - 1) * f;
            let coords: Vec<f64> = (lo..=hi)
                .map(|k| if k == 0 { self.anchor[a] } else { self.anchor[a] + k as f64 * h })
                .collect();
            k_min.push(lo);
            shape.push(coords.len());
            axes.push(coords);
        }
        Grid { h, anchor: self.anchor.clone(), k_min, shape, axes }
    }

    pub fn dim(&self) -> usize {
        self.shape.len()
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn multi(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0usize; self.dim()];
        for a in (0..self.dim()).rev() {
            idx[a] = flat % self.shape[a];
            flat /= self.shape[a];
        }
        idx
    }

    pub fn flat(&self, multi: &[usize]) -> usize {
        let mut f = 0usize;
        for a in 0..self.dim() {
            f = f * self.shape[a] + multi[a];
        }
        f
    }

    pub fn node(&self, flat: usize) -> Vec<f64> {
        let m = self.multi(flat);
        m.iter().enumerate().map(|(a, &i)| self.axes[a][i]).collect()
    }

    /// Flat index of the node nearest to `y`, if `y` is inside the lattice
    /// hull (within half a cell of slack).
    pub fn nearest_index(&self, y: &[f64]) -> Option<usize> {
        if y.len() != self.dim() {
            return None;
        }
        let mut multi = Vec::with_capacity(self.dim());
        for a in 0..self.dim() {
            let k = ((y[a] - self.anchor[a]) / self.h).round() as i64 - self.k_min[a];
            if k < 0 || k as usize >= self.shape[a] {
                return None;
            }
            multi.push(k as usize);
        }
        Some(self.flat(&multi))
    }
}

/// Regularity class a surface claims for itself. `Smooth` is only ever set
/// on surfaces whose grid-verified gradient margin held at acceptance time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regularity {
    Continuous,
    Smooth,
}

/// Exact expression for a surface, evaluable at any spatial point. Keeping
/// the expression (rather than only samples) is what makes half-spacing
/// re-verification meaningful.
#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceExpr {
    /// Constant level `t = t0`.
    Level(f64),
    /// `apex_t + slope * |y - apex_y|`.
    Cone { apex_t: f64, apex_y: Vec<f64>, slope: f64 },
    /// Flat level with one cone-shaped excursion reaching `apex_t` at
    /// `apex_y` and returning to `base_t` at radius `|apex_t - base_t|/slope`.
    Tent { base_t: f64, apex_t: f64, apex_y: Vec<f64>, slope: f64 },
    /// Multilinear interpolation of grid samples, coordinates clamped to the
    /// lattice hull (clamping is 1-Lipschitz, so bounds survive).
    Interp { grid: Grid, values: Vec<f64> },
    /// Average of translates against a product bump kernel of the given
    /// support radius, `taps` sample offsets per side and axis.
    Mollify { inner: Box<SurfaceExpr>, width: f64, taps: usize },
    /// `inner` plus a compactly supported bump fixing the value at `at`
    /// exactly; no effect at distance `radius` or more from `at`.
    Pin { inner: Box<SurfaceExpr>, at: Vec<f64>, value: f64, radius: f64 },
}

fn bump(u: f64) -> f64 {
    // Support (-1, 1), peak value e^0 = 1 at 0 after the shift below.
    if u.abs() >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - u * u)).exp()
    }
}

impl SurfaceExpr {
    pub fn eval(&self, y: &[f64]) -> f64 {
        match self {
            SurfaceExpr::Level(t0) => *t0,
            SurfaceExpr::Cone { apex_t, apex_y, slope } => {
                apex_t + slope * spatial_dist(y, apex_y)
            }
            SurfaceExpr::Tent { base_t, apex_t, apex_y, slope } => {
                let amp = apex_t - base_t;
                let reach = amp.abs() - slope * spatial_dist(y, apex_y);
                if reach <= 0.0 {
                    *base_t
                } else {
                    base_t + amp.signum() * reach
                }
            }
            SurfaceExpr::Interp { grid, values } => interp(grid, values, y),
            SurfaceExpr::Mollify { inner, width, taps } => {
                let m = *taps as i64;
                let d = y.len();
                // Per-axis offsets and weights; the product kernel keeps the
                // average a convex combination, so Lipschitz bounds survive.
                let mut offs = Vec::with_capacity(2 * *taps + 1);
                let mut wts = Vec::with_capacity(2 * *taps + 1);
                let mut norm = 0.0;
                for j in -m..=m {
                    let u = j as f64 / (m as f64 + 1.0);
                    let w = bump(u);
                    offs.push(width * u);
                    wts.push(w);
                    norm += w;
                }
                for w in &mut wts {
                    *w /= norm;
                }
                let n_taps = offs.len();
                let mut acc = 0.0;
                let mut point = vec![0.0; d];
                let mut idx = vec![0usize; d];
                loop {
                    let mut w = 1.0;
                    for a in 0..d {
                        point[a] = y[a] - offs[idx[a]];
                        w *= wts[idx[a]];
                    }
                    acc += w * inner.eval(&point);
                    // Odometer over the d-fold tap lattice.
                    let mut a = 0;
                    loop {
                        if a == d {
                            return acc;
                        }
                        idx[a] += 1;
                        if idx[a] < n_taps {
                            break;
                        }
                        idx[a] = 0;
                        a += 1;
                    }
                }
            }
            SurfaceExpr::Pin { inner, at, value, radius } => {
                if y == at.as_slice() {
                    return *value;
                }
                let r = spatial_dist(y, at) / radius;
                if r >= 1.0 {
                    inner.eval(y)
                } else {
                    let base = inner.eval(y);
                    let delta = value - inner.eval(at);
                    base + delta * bump(r)
                }
            }
        }
    }
}

fn interp(grid: &Grid, values: &[f64], y: &[f64]) -> f64 {
    let d = grid.dim();
    let mut lo = vec![0usize; d];
    let mut frac = vec![0.0; d];
    for a in 0..d {
        let pos = (y[a] - grid.anchor[a]) / grid.h - grid.k_min[a] as f64;
        let clamped = pos.clamp(0.0, (grid.shape[a] - 1) as f64);
        let base = clamped.floor().min((grid.shape[a] - 1) as f64 - 1.0).max(0.0);
        lo[a] = base as usize;
        frac[a] = if grid.shape[a] == 1 { 0.0 } else { (clamped - base).clamp(0.0, 1.0) };
    }
    let mut acc = 0.0;
    for corner in 0..(1usize << d) {
        let mut w = 1.0;
        let mut multi = Vec::with_capacity(d);
        for a in 0..d {
            let up = (corner >> a) & 1 == 1;
            let i = if up { (lo[a] + 1).min(grid.shape[a] - 1) } else { lo[a] };
            w *= if up { frac[a] } else { 1.0 - frac[a] };
            multi.push(i);
        }
        if w != 0.0 {
            acc += w * values[grid.flat(&multi)];
        }
    }
    acc
}

/// A graph surface `t = tau(y)`: grid samples plus the exact expression they
/// were sampled from.
#[derive(Debug, Clone)]
pub struct SurfaceFunction {
    grid: Grid,
    values: Vec<f64>,
    expr: SurfaceExpr,
    regularity: Regularity,
}

impl SurfaceFunction {
    pub fn from_expr(grid: Grid, expr: SurfaceExpr, regularity: Regularity) -> Self {
        let values = (0..grid.len()).map(|i| expr.eval(&grid.node(i))).collect();
        SurfaceFunction { grid, values, expr, regularity }
    }

    pub fn level(grid: Grid, t0: f64) -> Self {
        Self::from_expr(grid, SurfaceExpr::Level(t0), Regularity::Smooth)
    }

    pub fn cone(grid: Grid, apex_t: f64, apex_y: &[f64], slope: f64) -> Self {
        Self::from_expr(
            grid,
            SurfaceExpr::Cone { apex_t, apex_y: apex_y.to_vec(), slope },
            Regularity::Continuous,
        )
    }

    pub fn from_samples(grid: Grid, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), grid.len());
        let expr = SurfaceExpr::Interp { grid: grid.clone(), values: values.clone() };
        SurfaceFunction { grid, values, expr, regularity: Regularity::Continuous }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn expr(&self) -> &SurfaceExpr {
        &self.expr
    }

    pub fn regularity(&self) -> Regularity {
        self.regularity
    }

    pub fn eval(&self, y: &[f64]) -> f64 {
        self.expr.eval(y)
    }

    /// Same expression resampled on the `factor`-refined grid.
    pub fn resampled(&self, factor: u32) -> SurfaceFunction {
        SurfaceFunction::from_expr(self.grid.refined(factor), self.expr.clone(), self.regularity)
    }

    /// Largest pointwise gap to `other` over this surface's grid nodes.
    pub fn max_abs_deviation(&self, other: &SurfaceFunction) -> f64 {
        assert_eq!(self.grid, other.grid, "deviation needs a shared grid");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Maximum Euclidean norm of the central-difference gradient over the
    /// grid, with the node where it is attained. One-sided differences at
    /// the boundary.
    pub fn max_discrete_gradient(&self) -> (f64, usize) {
        let d = self.grid.dim();
        let mut worst = (0.0f64, 0usize);
        let mut multi = vec![0usize; d];
        for flat in 0..self.grid.len() {
            let m = self.grid.multi(flat);
            multi.copy_from_slice(&m);
            let mut g2 = 0.0;
            for a in 0..d {
                let i = multi[a];
                let n = self.grid.shape[a];
                if n == 1 {
                    continue;
                }
                let (lo, hi, span) = if i == 0 {
                    (flat, self.shift(flat, a, 1), self.grid.h)
                } else if i == n - 1 {
                    (self.shift(flat, a, -1), flat, self.grid.h)
                } else {
                    (self.shift(flat, a, -1), self.shift(flat, a, 1), 2.0 * self.grid.h)
                };
                let ga = (self.values[hi] - self.values[lo]) / span;
                g2 += ga * ga;
            }
            let g = g2.sqrt();
            if g > worst.0 {
                worst = (g, flat);
            }
        }
        worst
    }

    fn shift(&self, flat: usize, axis: usize, by: i64) -> usize {
        let mut m = self.grid.multi(flat);
        m[axis] = (m[axis] as i64 + by) as usize;
        self.grid.flat(&m)
    }

    /// CSV rows `y1,..,yd,tau`, one grid node per line, with a header.
    pub fn to_csv(&self) -> String {
        let d = self.grid.dim();
        let mut out = String::new();
        for a in 0..d {
            out.push_str(&format!("y{},", a + 1));
        }
        out.push_str("tau\n");
        for flat in 0..self.grid.len() {
            let node = self.grid.node(flat);
            for c in &node {
                out.push_str(&format!("{c},"));
            }
            out.push_str(&format!("{}\n", self.values[flat]));
        }
        out
    }
}

/// Pointwise deviation allowance for a deformation, one bound per grid node.
#[derive(Debug, Clone)]
pub enum EpsProfile {
    Uniform(f64),
    PerNode(Vec<f64>),
}

impl EpsProfile {
    fn at(&self, node: usize) -> f64 {
        match self {
            EpsProfile::Uniform(e) => *e,
            EpsProfile::PerNode(v) => v[node],
        }
    }

    fn validate(&self, nodes: usize) -> Result<(), SurfaceError> {
        match self {
            EpsProfile::Uniform(e) => {
                if *e > 0.0 {
                    Ok(())
                } else {
                    Err(SurfaceError::NonPositiveEps)
                }
            }
            EpsProfile::PerNode(v) => {
                if v.len() == nodes && v.iter().all(|e| *e > 0.0) {
                    Ok(())
                } else {
                    Err(SurfaceError::NonPositiveEps)
                }
            }
        }
    }

    fn min(&self) -> f64 {
        match self {
            EpsProfile::Uniform(e) => *e,
            EpsProfile::PerNode(v) => v.iter().cloned().fold(f64::INFINITY, f64::min),
        }
    }
}

/// Deforms `tau_c` into a smooth surface through `p`, staying within `eps`
/// of the input at every grid node and keeping the discrete gradient at or
/// below `1 - SPACELIKE_MARGIN`.
///
/// `p` must project onto a grid node and lie on the input's graph closure
/// there (a pin that has to bridge a genuine gap shows up as a failed
/// deviation bound, i.e. `ToleranceUnachievable`). The kernel width starts
/// at [`tol::KERNEL_CELLS`] cells and halves until every postcondition
/// verifies on the grid.
pub fn deform_surface_through_point(
    tau_c: &SurfaceFunction,
    p: &Event,
    eps: &EpsProfile,
) -> Result<SurfaceFunction, SurfaceError> {
    let grid = tau_c.grid.clone();
    eps.validate(grid.len())?;
    let margin_cap = 1.0 - tol::SPACELIKE_MARGIN;

    let pin = grid.nearest_index(&p.x).ok_or(SurfaceError::PinOffGrid)?;
    let pin_coords = grid.node(pin);
    if spatial_dist(&pin_coords, &p.x) > 1e-9 {
        return Err(SurfaceError::PinOffGrid);
    }

    let (grad_in, node_in) = tau_c.max_discrete_gradient();
    if grad_in > 1.0 + tol::ACHRONAL_SLACK {
        return Err(SurfaceError::NotAchronal { node: node_in, grad: grad_in });
    }

    // Already-smooth surface through p with margin to spare: nothing to do.
    if tau_c.regularity == Regularity::Smooth
        && tau_c.values[pin] == p.t
        && grad_in <= margin_cap
    {
        return Ok(tau_c.clone());
    }

    let mut width = tol::KERNEL_CELLS as f64 * grid.h();
    let mut best = f64::INFINITY;
    for _ in 0..10 {
        let smooth = SurfaceExpr::Mollify {
            inner: Box::new(tau_c.expr.clone()),
            width,
            taps: tol::KERNEL_CELLS,
        };
        let radius = 4.0 * width.max(grid.h());
        let expr = SurfaceExpr::Pin {
            inner: Box::new(smooth),
            at: pin_coords.clone(),
            value: p.t,
            radius,
        };
        let candidate = SurfaceFunction::from_expr(grid.clone(), expr, Regularity::Smooth);
        debug_assert_eq!(candidate.values[pin], p.t);

        let mut dev = 0.0f64;
        let mut within = true;
        for i in 0..grid.len() {
            let d = (candidate.values[i] - tau_c.values[i]).abs();
            dev = dev.max(d);
            if d >= eps.at(i) {
                within = false;
            }
        }
        best = best.min(dev);
        if within && candidate.max_discrete_gradient().0 <= margin_cap {
            return Ok(candidate);
        }
        width /= 2.0;
    }
    Err(SurfaceError::ToleranceUnachievable { needed: eps.min(), achieved: best })
}

/// Open spatial ball used as a base set for diamonds and squeeze checks.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseBall {
    pub center: Vec<f64>,
    pub radius: f64,
}

impl BaseBall {
    pub fn new(center: &[f64], radius: f64) -> Self {
        BaseBall { center: center.to_vec(), radius }
    }

    pub fn contains(&self, y: &[f64]) -> bool {
        spatial_dist(y, &self.center) < self.radius
    }

    pub fn closure_contains(&self, y: &[f64]) -> bool {
        spatial_dist(y, &self.center) <= self.radius
    }

    /// Closure of `self` inside the open ball `outer`, strictly.
    pub fn nested_in(&self, outer: &BaseBall) -> bool {
        spatial_dist(&self.center, &outer.center) + self.radius < outer.radius
    }
}

/// Outcome of the two squeeze conditions for a deformed surface against
/// nested base sets.
#[derive(Debug, Clone)]
pub struct SqueezeReport {
    /// Causal hull of the inner base on the old surface, cut with the new
    /// surface, stays inside the transported first envelope.
    pub cond_a: bool,
    /// Causal hull of the transported envelope, cut with the old surface,
    /// stays inside the second envelope.
    pub cond_b: bool,
    pub witnesses_a: Vec<usize>,
    pub witnesses_b: Vec<usize>,
    pub checked_nodes: usize,
}

/// Checks both squeeze conditions by dense grid sampling.
///
/// Causal hulls are sampled on the shared grid, with base sets dilated by
/// one cell so that off-grid base points are conservatively covered; a
/// passing report therefore over-approximates the hulls, never under.
pub fn check_squeeze_conditions(
    tau_c: &SurfaceFunction,
    tau_co: &SurfaceFunction,
    g: &BaseBall,
    u1: &BaseBall,
    u2: &BaseBall,
) -> Result<SqueezeReport, SurfaceError> {
    if tau_c.grid != tau_co.grid {
        return Err(SurfaceError::GridMismatch);
    }
    if !g.nested_in(u1) {
        return Err(SurfaceError::PreconditionNesting(
            "closure of the inner base must sit strictly inside the first envelope".into(),
        ));
    }
    if !u1.nested_in(u2) {
        return Err(SurfaceError::PreconditionNesting(
            "closure of the first envelope must sit strictly inside the second".into(),
        ));
    }
    let grid = &tau_c.grid;
    let h = grid.h();

    // Graph samples of tau_c over the dilated closure of g, and of tau_co
    // over the dilated closure of u1.
    let mut hull_a: Vec<(f64, Vec<f64>)> = Vec::new();
    let mut hull_b: Vec<(f64, Vec<f64>)> = Vec::new();
    for i in 0..grid.len() {
        let y = grid.node(i);
        if spatial_dist(&y, &g.center) <= g.radius + h {
            hull_a.push((tau_c.values()[i], y.clone()));
        }
        if spatial_dist(&y, &u1.center) <= u1.radius + h {
            hull_b.push((tau_co.values()[i], y));
        }
    }

    let in_hull = |t: f64, y: &[f64], samples: &[(f64, Vec<f64>)]| {
        samples
            .iter()
            .any(|(ts, ys)| (t - ts).abs() >= spatial_dist(y, ys))
    };

    let mut witnesses_a = Vec::new();
    let mut witnesses_b = Vec::new();
    for i in 0..grid.len() {
        let y = grid.node(i);
        if in_hull(tau_co.values()[i], &y, &hull_a) && !u1.contains(&y) {
            witnesses_a.push(i);
        }
        if in_hull(tau_c.values()[i], &y, &hull_b) && !u2.contains(&y) {
            witnesses_b.push(i);
        }
    }
    Ok(SqueezeReport {
        cond_a: witnesses_a.is_empty(),
        cond_b: witnesses_b.is_empty(),
        witnesses_a,
        witnesses_b,
        checked_nodes: grid.len(),
    })
}
