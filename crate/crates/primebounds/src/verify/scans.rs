//! Prime-indexed scan campaigns: the finite computer checks the bound
//! theorems rest on.
//!
//! An upper scan checks `bound(pᵢ) > i` for every index in range; with
//! the bound certified monotone increasing from a threshold on, this
//! covers every real x in the scanned window. A lower scan checks
//! `i ≥ bound(pᵢ₊₁)` (strictly, for the boundary variant), covering
//! `[pᵢ, pᵢ₊₁)` the same way. The gap scan checks
//! `pₙ(1 + c/log³ pₙ) > pₙ₊₁` directly.
//!
//! Scans partition their range into segment-grid chunks, process the
//! chunks in parallel, and merge chunk results in grid order, so
//! reports are deterministic for a given configuration.

use num_traits::Signed;
use rayon::prelude::*;

use super::report::VerificationReport;
use crate::bounds::{bound, bound_derivative_in_t, BoundSpec};
use crate::exactmath::{
    is_nonneg_on_ray, is_positive_on_ray, rat_to_f64, FloatCtx, Interval, Rat,
};
use crate::primes::Primes;
use crate::{Error, Result};

/// Downward counterexample scans stop after this many primes.
const DOWNWARD_CAP: u64 = 10_000_000;

/// Certifies that a bound is increasing for `log x ≥ from`: the
/// symbolic derivative's numerator is nonnegative and its denominator
/// strictly positive on the ray, by Sturm chains.
pub fn certify_monotone_increasing(spec: &BoundSpec, from: &Rat) -> Result<()> {
    let d = bound_derivative_in_t(&spec.shape);
    let fail = |what: &str| Error::MonotonicityUnverified {
        bound: format!("{} ({what})", spec.name),
        from: from.to_string(),
    };
    let (den_ok, _) = is_positive_on_ray(d.den(), from)?;
    if !den_ok {
        return Err(fail("derivative denominator not positive"));
    }
    let (num_ok, _) = is_nonneg_on_ray(d.num(), from)?;
    if !num_ok {
        return Err(fail("derivative numerator not nonnegative"));
    }
    Ok(())
}

#[derive(Debug)]
struct ChunkResult {
    checked: u64,
    escalations: u64,
    worst: Option<(f64, f64)>, // (x, margin)
    violations: Vec<(u64, u64, u64)>, // (i, p, successor)
}

impl ChunkResult {
    fn new() -> Self {
        ChunkResult { checked: 0, escalations: 0, worst: None, violations: Vec::new() }
    }

    fn observe(&mut self, x: f64, margin: f64) {
        match self.worst {
            Some((wx, wm)) if (wm, wx) <= (margin, x) => {}
            _ => self.worst = Some((x, margin)),
        }
    }

    fn merge(mut self, other: ChunkResult) -> ChunkResult {
        self.checked += other.checked;
        self.escalations += other.escalations;
        if let Some((x, m)) = other.worst {
            self.observe(x, m);
        }
        self.violations.extend(other.violations);
        self
    }
}

/// One verdict from a per-prime check.
struct CheckOutcome {
    ok: bool,
    margin: f64,
    escalations: u32,
}

/// Drives a check over all primes with indices in `[i_lo, i_hi]`,
/// feeding each prime and (when `need_successor`) the next prime.
/// Two passes over the segment grid: the first counts primes per cell
/// to fix the index offsets, the second runs the checks in parallel.
/// Chunk results are merged in grid order.
fn parallel_indexed_scan<F>(
    primes: &Primes,
    i_lo: u64,
    i_hi: u64,
    need_successor: bool,
    check: F,
) -> Result<ChunkResult>
where
    F: Fn(u64, u64, u64) -> Result<CheckOutcome> + Sync,
{
    let p_lo = primes.nth_prime(i_lo)?;
    let sieve = primes.sieve();
    let limit = sieve.limit();

    let span = 2 * crate::primes::SEGMENT_ODDS as u64;
    let needed = estimate_prime_upper(i_hi + 2).min(limit);
    let cells: Vec<u64> = (p_lo / span..=limit / span)
        .take_while(|&c| c * span <= needed)
        .collect();

    // Pass 1: per-cell counts and first primes.
    let counts: Vec<(u64, Option<u64>)> = cells
        .par_iter()
        .map(|&c| {
            let a = (c * span).max(p_lo);
            let b = ((c + 1) * span - 1).min(limit);
            let block = sieve.sieve_segment(a, b)?;
            let first = block.iter_primes().next();
            Ok((block.count(), first))
        })
        .collect::<Result<Vec<_>>>()?;

    // Successor of the last prime of each cell = first prime of the
    // next nonempty cell.
    let mut next_first = vec![0u64; cells.len()];
    let mut carry = 0u64;
    for idx in (0..cells.len()).rev() {
        next_first[idx] = carry;
        if let Some(f) = counts[idx].1 {
            carry = f;
        }
    }

    // Index of the last prime before each cell; p_lo carries i_lo.
    let mut offsets = vec![0u64; cells.len()];
    let mut acc = i_lo - 1;
    for idx in 0..cells.len() {
        offsets[idx] = acc;
        acc += counts[idx].0;
    }
    if acc < i_hi + u64::from(need_successor) {
        return Err(Error::LimitExceeded { requested: i_hi, limit });
    }

    // Pass 2: checks, in parallel, merged in grid order.
    let chunks: Vec<Result<ChunkResult>> = cells
        .par_iter()
        .enumerate()
        .map(|(idx, &c)| {
            let mut out = ChunkResult::new();
            if offsets[idx] > i_hi || offsets[idx] + counts[idx].0 < i_lo {
                return Ok(out);
            }
            let a = (c * span).max(p_lo);
            let b = ((c + 1) * span - 1).min(limit);
            let block = sieve.sieve_segment(a, b)?;
            let cell_primes: Vec<u64> = block.iter_primes().collect();
            for (j, &p) in cell_primes.iter().enumerate() {
                let i = offsets[idx] + j as u64 + 1;
                if i < i_lo || i > i_hi {
                    continue;
                }
                let successor = if need_successor {
                    match cell_primes.get(j + 1) {
                        Some(&s) => s,
                        None => next_first[idx],
                    }
                } else {
                    0
                };
                if need_successor && successor == 0 {
                    return Err(Error::LimitExceeded { requested: i + 1, limit });
                }
                let outcome = check(i, p, successor)?;
                out.checked += 1;
                out.escalations += outcome.escalations as u64;
                out.observe(p as f64, outcome.margin);
                if !outcome.ok {
                    out.violations.push((i, p, successor));
                }
            }
            Ok(out)
        })
        .collect();
    let mut merged = ChunkResult::new();
    for chunk in chunks {
        merged = merged.merge(chunk?);
    }
    Ok(merged)
}

/// Rosser-style upper estimate for pₙ, safe for n ≥ 6.
fn estimate_prime_upper(n: u64) -> u64 {
    if n < 6 {
        return 16;
    }
    let nf = n as f64;
    (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 16
}

/// Upper scan: `bound(pᵢ) > i` for all `i ∈ [i_lo, i_hi]`.
///
/// Before scanning, the bound must be certified monotone increasing
/// from `mono_from` (a rational bound in `t = log x`); when the first
/// scanned prime lies below `e^mono_from`, the runner additionally
/// certifies `bound(e^mono_from) > π(e^mono_from)` so that the covered
/// real window starts at `e^mono_from`.
pub fn verify_upper_at_primes(
    primes: &Primes,
    bound_name: &str,
    i_lo: u64,
    i_hi: u64,
    mono_from: &Rat,
) -> Result<VerificationReport> {
    let started = std::time::Instant::now();
    let spec = bound(bound_name)?;
    if spec.direction != crate::bounds::Direction::Upper {
        return Err(Error::Domain(format!("{bound_name} is not an upper bound")));
    }
    let mut report = VerificationReport::new(format!("upper-scan:{bound_name}"));
    if i_lo > i_hi {
        report.wall_ms = started.elapsed().as_millis();
        return Ok(report); // empty range passes with zero checks
    }
    certify_monotone_increasing(spec, mono_from)?;
    boundary_sliver_check(primes, spec, i_lo, mono_from, &mut report)?;

    let chunk = parallel_indexed_scan(primes, i_lo, i_hi, false, |i, p, _| {
        let v = spec.eval(p as f64)?;
        let margin = v - i as f64;
        let scale = v.abs().max(i as f64).max(1.0);
        if margin.abs() > 1e-9 * scale {
            Ok(CheckOutcome { ok: margin > 0.0, margin, escalations: 0 })
        } else {
            let (ok, esc) = spec.certified_cmp(p, &Rat::from_integer(i.into()), true)?;
            Ok(CheckOutcome { ok, margin, escalations: esc })
        }
    })?;

    report.checked = chunk.checked;
    report.escalations += chunk.escalations;
    if let Some((x, m)) = chunk.worst {
        report.observe_margin(x, m);
    }
    for (i, p, _) in &chunk.violations {
        report.add_counterexample(p.to_string(), spec.eval(*p as f64)?, *i as f64);
    }
    report.wall_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Lower scan: `i ≥ bound(pᵢ₊₁)` (or `i > bound(pᵢ₊₁)` when `strict`)
/// for all `i ∈ [i_lo, i_hi]`.
pub fn verify_lower_at_primes(
    primes: &Primes,
    bound_name: &str,
    i_lo: u64,
    i_hi: u64,
    mono_from: &Rat,
    strict: bool,
) -> Result<VerificationReport> {
    let started = std::time::Instant::now();
    let spec = bound(bound_name)?;
    if spec.direction != crate::bounds::Direction::Lower {
        return Err(Error::Domain(format!("{bound_name} is not a lower bound")));
    }
    let mut report = VerificationReport::new(format!("lower-scan:{bound_name}"));
    if i_lo > i_hi {
        report.wall_ms = started.elapsed().as_millis();
        return Ok(report);
    }
    certify_monotone_increasing(spec, mono_from)?;

    let chunk = parallel_indexed_scan(primes, i_lo, i_hi, true, |i, _p, succ| {
        let v = spec.eval(succ as f64)?;
        let margin = i as f64 - v;
        let scale = v.abs().max(i as f64).max(1.0);
        if margin.abs() > 1e-9 * scale {
            let ok = if strict { margin > 0.0 } else { margin >= 0.0 };
            Ok(CheckOutcome { ok, margin, escalations: 0 })
        } else {
            // i ≥ bound(succ) ⇔ not (bound(succ) > i); the strict
            // variant i > bound(succ) ⇔ not (bound(succ) ≥ i).
            let (above, esc) =
                spec.certified_cmp(succ, &Rat::from_integer(i.into()), !strict)?;
            Ok(CheckOutcome { ok: !above, margin, escalations: esc })
        }
    })?;

    report.checked = chunk.checked;
    report.escalations += chunk.escalations;
    if let Some((x, m)) = chunk.worst {
        report.observe_margin(x, m);
    }
    for (i, p, succ) in &chunk.violations {
        report.add_counterexample(p.to_string(), *i as f64, spec.eval(*succ as f64)?);
    }
    report.wall_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Gap scan: `pₙ(1 + c/log³ pₙ) > pₙ₊₁` for all `n ∈ [n_lo, n_hi]`.
///
/// Covering all real x additionally needs `x(1 + c/log³x)` increasing,
/// which is certified first via the polynomial `t⁴ + c·t − 3c`.
pub fn verify_gap_range(
    primes: &Primes,
    n_lo: u64,
    n_hi: u64,
    c_coeff: &Rat,
) -> Result<VerificationReport> {
    let started = std::time::Instant::now();
    if !c_coeff.is_positive() {
        return Err(Error::Domain("gap coefficient must be positive".into()));
    }
    let mut report = VerificationReport::new("gap-scan");
    if n_lo > n_hi {
        report.wall_ms = started.elapsed().as_millis();
        return Ok(report);
    }
    // d/dx [x + c·x/log³x] = 1 + c(log x − 3)/log⁴x: positive from
    // log x ≥ a when t⁴ + c·t − 3c ≥ 0 there.
    let growth = {
        use crate::exactmath::Poly;
        let p4 = Poly::monomial(Rat::from_integer(1.into()), 4);
        let p1 = Poly::monomial(c_coeff.clone(), 1);
        &(&p4 + &p1) - &Poly::constant(c_coeff * Rat::from_integer(3.into()))
    };
    let p_first = primes.nth_prime(n_lo)?;
    let anchor = if p_first >= 3 {
        Rat::from_integer(1.into())
    } else {
        Rat::new(69.into(), 100.into()) // just below log 2
    };
    let (mono_ok, _) = is_nonneg_on_ray(&growth, &anchor)?;
    if !mono_ok {
        return Err(Error::MonotonicityUnverified {
            bound: format!("gap map with c = {c_coeff}"),
            from: anchor.to_string(),
        });
    }

    let c_f64 = rat_to_f64(c_coeff);
    let chunk = parallel_indexed_scan(primes, n_lo, n_hi, true, |_n, p, succ| {
        let t = (p as f64).ln();
        let lhs = p as f64 * (1.0 + c_f64 / (t * t * t));
        let margin = lhs - succ as f64;
        let scale = lhs.max(1.0);
        if margin.abs() > 1e-9 * scale {
            Ok(CheckOutcome { ok: margin > 0.0, margin, escalations: 0 })
        } else {
            let (ok, esc) = certified_gap_cmp(p, succ, c_coeff)?;
            Ok(CheckOutcome { ok, margin, escalations: esc })
        }
    })?;

    report.checked = chunk.checked;
    report.escalations = chunk.escalations;
    if let Some((x, m)) = chunk.worst {
        report.observe_margin(x, m);
    }
    for (n, p, succ) in &chunk.violations {
        let t = (*p as f64).ln();
        let lhs = *p as f64 * (1.0 + c_f64 / (t * t * t));
        report.add_counterexample(format!("n = {n} (p = {p})"), lhs, *succ as f64);
    }
    report.wall_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Certified `p(1 + c/log³p) > q` via interval arithmetic with
/// escalating precision; decided verdicts are re-verified one tier up.
fn certified_gap_cmp(p: u64, q: u64, c: &Rat) -> Result<(bool, u32)> {
    let mut verdict: Option<bool> = None;
    let mut escalations = 0;
    for prec in [128usize, 256, 512, 1024, 2048] {
        escalations += 1;
        let mut ctx = FloatCtx::new(prec);
        let pi = Interval::from_u64(p, &mut ctx);
        let t = pi.ln(&mut ctx)?;
        let t3 = t.mul(&t, &ctx).mul(&t, &ctx);
        let ci = Interval::from_rat(c, &mut ctx);
        let lhs = pi.add(&ci.mul(&pi, &ctx).div(&t3, &ctx)?, &ctx);
        let qr = Rat::from_integer(q.into());
        let decided = if lhs.strictly_above(&qr) {
            Some(true)
        } else if lhs.hi_rat() <= qr {
            Some(false)
        } else {
            None
        };
        match (verdict, decided) {
            (None, Some(d)) => verdict = Some(d),
            (Some(prev), Some(d)) if prev == d => return Ok((d, escalations)),
            (Some(_), _) => {
                return Err(Error::PrecisionInsufficient(format!(
                    "gap comparison unstable at p = {p}"
                )))
            }
            (None, None) => {}
        }
    }
    Err(Error::PrecisionInsufficient(format!("gap comparison at p = {p}")))
}

fn boundary_sliver_check(
    primes: &Primes,
    spec: &BoundSpec,
    i_lo: u64,
    mono_from: &Rat,
    report: &mut VerificationReport,
) -> Result<()> {
    let p_lo = primes.nth_prime(i_lo)?;
    let mut ctx = FloatCtx::new(128);
    let ln_plo = Interval::from_u64(p_lo, &mut ctx).ln(&mut ctx)?;
    if ln_plo.lo_rat() >= *mono_from {
        return Ok(()); // monotone from the very first scanned prime
    }
    // The window [e^m, next prime) has π = π(⌊e^m⌋); certify the bound
    // exceeds it at the window's left end using the exact ratio at m.
    let exp_m = Interval::from_rat(mono_from, &mut ctx).exp(&mut ctx);
    let floor_lo = exp_m.lo_rat().floor().to_integer();
    let floor_hi = exp_m.hi_rat().floor().to_integer();
    if floor_lo != floor_hi {
        return Err(Error::PrecisionInsufficient(
            "could not resolve floor(e^mono_from)".into(),
        ));
    }
    let m_int: u64 = u64::try_from(floor_lo)
        .map_err(|_| Error::Domain("mono_from is out of the sieve's range".into()))?;
    let pi_at = primes.pi(m_int)?;
    let value_lo = exp_m.lo_rat() * spec.ratio_at_log(mono_from)?;
    if value_lo <= Rat::from_integer(pi_at.into()) {
        return Err(Error::MonotonicityUnverified {
            bound: format!("{} (window start at e^{mono_from})", spec.name),
            from: mono_from.to_string(),
        });
    }
    report.detail = Some(format!(
        "covers real x from e^{mono_from} on; window check pi = {pi_at} passed"
    ));
    Ok(())
}

/// Walks indices downward from `i_start` and reports the first
/// `(index, prime)` where the scan inequality fails, stepping
/// blockwise so the sieve work stays linear; capped at 10⁷ primes.
pub fn downward_first_violation(
    primes: &Primes,
    bound_name: &str,
    i_start: u64,
    strict: bool,
) -> Result<Option<(u64, u64)>> {
    let spec = bound(bound_name)?;
    let upper = spec.direction == crate::bounds::Direction::Upper;
    let mut hit = None;
    walk_primes_downward(primes, i_start, |i, p, succ| {
        let ok = if upper {
            let (above, _) = spec.certified_cmp(p, &Rat::from_integer(i.into()), true)?;
            above
        } else {
            let (above, _) = spec.certified_cmp(succ, &Rat::from_integer(i.into()), !strict)?;
            !above
        };
        if !ok {
            hit = Some((i, p));
        }
        Ok(ok)
    })?;
    Ok(hit)
}

/// Downward variant of the gap scan: first n below `n_start` where
/// `pₙ(1 + c/log³pₙ) ≤ pₙ₊₁`.
pub fn downward_gap_violation(
    primes: &Primes,
    n_start: u64,
    c_coeff: &Rat,
) -> Result<Option<(u64, u64)>> {
    let c_f64 = rat_to_f64(c_coeff);
    let mut hit = None;
    walk_primes_downward(primes, n_start, |n, p, succ| {
        let t = (p as f64).ln();
        let lhs = p as f64 * (1.0 + c_f64 / (t * t * t));
        let margin = lhs - succ as f64;
        let ok = if margin.abs() > 1e-9 * lhs.max(1.0) {
            margin > 0.0
        } else {
            certified_gap_cmp(p, succ, c_coeff)?.0
        };
        if !ok {
            hit = Some((n, p));
        }
        Ok(ok)
    })?;
    Ok(hit)
}

/// Visits `(i, pᵢ, pᵢ₊₁)` for i = i_start, i_start−1, … until the
/// closure returns false or the cap is hit, sieving one grid cell at a
/// time in reverse.
fn walk_primes_downward<F>(primes: &Primes, i_start: u64, mut f: F) -> Result<()>
where
    F: FnMut(u64, u64, u64) -> Result<bool>,
{
    let p_start = primes.nth_prime(i_start)?;
    let mut successor = primes.nth_prime(i_start + 1)?;
    let span = 2 * crate::primes::SEGMENT_ODDS as u64;
    let mut cell = p_start / span;
    let mut i = i_start;
    let mut steps = 0u64;
    loop {
        let a = cell * span;
        let b = ((cell + 1) * span - 1).min(primes.limit());
        let block = primes.sieve().sieve_segment(a, b)?;
        let cell_primes: Vec<u64> = block.iter_primes().filter(|&p| p <= p_start).collect();
        for &p in cell_primes.iter().rev() {
            steps += 1;
            if steps > DOWNWARD_CAP {
                return Ok(());
            }
            if !f(i, p, successor)? {
                return Ok(());
            }
            successor = p;
            if i == 1 {
                return Ok(());
            }
            i -= 1;
        }
        if cell == 0 {
            return Ok(());
        }
        cell -= 1;
    }
}
