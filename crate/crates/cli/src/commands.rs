use std::collections::BTreeSet;

use azumaya_core::document::{Ambient, FunctionalRole, StructureConstantDocument};
use azumaya_core::integral::{check_integral_identities, check_s_identities};
use azumaya_core::{
    build_a_sigma, build_clifford, build_en, check_dqt_rform, check_left_2cocycle, en_azumaya_criterion,
    en_cocycle, is_azumaya, is_azumaya_cleft, rform_en, rsigma_generator_table, Check, ENParams, Error, Field,
    Functional2, HopfAlgebra, Matrix, Report, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::args::{EnArgs, Route, Suite, SweepArgs};
use crate::input::{en_params, params_json, parse_scalar};
use crate::report::{settle, RouteKind, RouteVerdict, SweepPoint, TableRow, VerdictReport};

fn verdict<F: Field>(route: RouteKind, det: &F) -> RouteVerdict {
    RouteVerdict {
        route,
        azumaya: !det.is_zero(),
        determinant: det.to_string(),
    }
}

/// Runs the selected routes for the Clifford extension of `E(n)` over `r_A`.
pub fn en_routes<F: Field>(p: &ENParams<F>, routes: &[Route]) -> Result<Vec<RouteVerdict>> {
    let routes: BTreeSet<Route> = routes.iter().copied().collect();
    let mut out = Vec::new();
    if routes.contains(&Route::Theta) || routes.contains(&Route::Fg) {
        let h = build_en::<F>(p.n)?;
        let sigma = en_cocycle(p)?;
        let r = rform_en(p.n, &p.a)?;
        if routes.contains(&Route::Theta) {
            let ev = is_azumaya_cleft(&h, &sigma, &r)?;
            out.push(verdict(RouteKind::Theta, &ev.det_theta));
        }
        if routes.contains(&Route::Fg) {
            let a = build_a_sigma(&h, &sigma)?;
            let ev = is_azumaya(&a, &r)?;
            out.push(verdict(RouteKind::F, &ev.det_f));
            out.push(verdict(RouteKind::G, &ev.det_g));
        }
    }
    if routes.contains(&Route::Det) {
        let c = en_azumaya_criterion(p)?;
        out.push(verdict(RouteKind::Criterion, &c.determinant));
    }
    Ok(out)
}

pub fn en_check<F: Field>(args: &EnArgs, routes: &[Route]) -> Result<VerdictReport> {
    let p = en_params::<F>(args)?;
    let mut input = params_json(&p);
    input["routes"] = json!(routes.iter().map(|r| format!("{r:?}").to_lowercase()).collect::<Vec<_>>());
    let mut report = VerdictReport::new("en-check", F::field_name(), input);
    report.routes = en_routes(&p, routes)?;
    report.settle_routes();
    Ok(report)
}

pub fn table<F: Field>(args: &EnArgs) -> Result<VerdictReport> {
    let p = en_params::<F>(args)?;
    let mut report = VerdictReport::new("table", F::field_name(), params_json(&p));
    let entries = rsigma_generator_table(&p)?;
    report.table = entries
        .iter()
        .map(|e| TableRow {
            family: e.family.to_string(),
            argument: e.argument(),
            computed: e.computed.to_string(),
            expected: e.expected.to_string(),
            matches: e.matches(),
        })
        .collect();
    report.checks.push(match entries.iter().find(|e| !e.matches()) {
        None => Check::pass("closed forms"),
        Some(e) => Check::fail("closed forms", format!("r_sigma({}) = {}, expected {}", e.argument(), e.computed, e.expected)),
    });
    Ok(report)
}

fn prefixed(prefix: &str, report: Report) -> Vec<Check> {
    report
        .checks
        .into_iter()
        .map(|c| Check {
            name: format!("{prefix}: {}", c.name),
            ..c
        })
        .collect()
}

fn failed(name: String, e: &Error) -> Check {
    Check::fail(name, e.to_string())
}

pub fn verify<F: Field>(doc: &StructureConstantDocument, path: &str, suites: &[Suite]) -> Result<VerdictReport> {
    let h: HopfAlgebra<F> = doc.hopf()?;
    let functionals = doc.functionals::<F>()?;
    let algebra = doc.comodule_algebra(&h)?;
    let input = json!({
        "document": path,
        "dimension": h.dim(),
        "functionals": functionals.iter().map(|(n, _, _)| n.clone()).collect::<Vec<_>>(),
        "comodule_algebra": algebra.is_some(),
    });
    let mut report = VerdictReport::new("verify", F::field_name(), input);
    let on = |s: Suite| suites.contains(&s);
    let cocycles: Vec<&(String, FunctionalRole, Functional2<F>)> =
        functionals.iter().filter(|f| f.1 == FunctionalRole::Cocycle).collect();
    let rforms: Vec<&(String, FunctionalRole, Functional2<F>)> =
        functionals.iter().filter(|f| f.1 == FunctionalRole::Rform).collect();

    let mut hopf_ok = true;
    if on(Suite::Hopf) {
        let r = h.verify_axioms();
        hopf_ok = r.all_passed();
        report.checks.extend(prefixed("hopf", r));
    }
    let mut good_cocycle = None;
    if on(Suite::Cocycle) {
        for (name, _, sigma) in &cocycles {
            let r = check_left_2cocycle(sigma, &h);
            if r.all_passed() && good_cocycle.is_none() {
                good_cocycle = Some(sigma);
            }
            report.checks.extend(prefixed(&format!("cocycle {name}"), r));
        }
    }
    let mut good_rform = None;
    if on(Suite::Dqt) {
        for (name, _, r) in &rforms {
            let rep = check_dqt_rform(r, &h);
            if rep.all_passed() && good_rform.is_none() {
                good_rform = Some(r);
            }
            report.checks.extend(prefixed(&format!("rform {name}"), rep));
        }
    }
    if on(Suite::Comodule) {
        if let Some(a) = &algebra {
            report.checks.extend(prefixed("comodule algebra", a.check()));
        }
    }
    if on(Suite::Integral) {
        match check_integral_identities(&h) {
            Ok(r) => report.checks.extend(prefixed("integral", r)),
            Err(e) => report.checks.push(failed("integral: left integral".into(), &e)),
        }
    }
    if on(Suite::SMaps) {
        for (name, _, sigma) in &cocycles {
            match check_s_identities(&h, sigma) {
                Ok(r) => report.checks.extend(prefixed(&format!("s-maps {name}"), r)),
                Err(e) => report.checks.push(failed(format!("s-maps {name}: S1 and S2"), &e)),
            }
        }
    }

    if let (true, Some(sigma), Some(r)) = (hopf_ok, good_cocycle, good_rform) {
        let ev = is_azumaya_cleft(&h, sigma, r)?;
        report.routes.push(verdict(RouteKind::Theta, &ev.det_theta));
        let a = build_a_sigma(&h, sigma)?;
        let ev = is_azumaya(&a, r)?;
        report.routes.push(verdict(RouteKind::F, &ev.det_f));
        report.routes.push(verdict(RouteKind::G, &ev.det_g));
        report.settle_routes();
    }
    Ok(report)
}

/// The fixed grid `α ∈ {1,-1,2}`, `γ ∈ {0,1,2}`, `λ ∈ {0,1,-1/2}`, `t ∈ {0,1,-2}`.
pub fn h4_grid<F: Field>() -> Result<Vec<ENParams<F>>> {
    let s = |t: &str| F::parse_scalar(t);
    let mut out = Vec::with_capacity(81);
    for alpha in ["1", "-1", "2"] {
        for gamma in ["0", "1", "2"] {
            for lambda in ["0", "1", "-1/2"] {
                for t in ["0", "1", "-2"] {
                    out.push(ENParams::h4(s(t)?, s(alpha)?, s(gamma)?, s(lambda)?)?);
                }
            }
        }
    }
    Ok(out)
}

/// Seeded parameters with integer entries in `-range..=range`.
pub fn random_points<F: Field>(n: usize, count: usize, seed: u64, range: i64, alphas: &[F]) -> Result<Vec<ENParams<F>>> {
    if alphas.is_empty() || alphas.iter().any(|a| a.is_zero()) {
        return Err(Error::InvalidParameter("alpha candidates must be nonempty and nonzero".into()));
    }
    if range < 0 {
        return Err(Error::InvalidParameter("range must be nonnegative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| F::from_i64(rng.gen_range(-range..=range));
    (0..count)
        .map(|_| {
            let a = Matrix::from_fn(n, n, |_, _| draw(&mut rng));
            let alpha = alphas[rng.gen_range(0..alphas.len())].clone();
            let gamma = (0..n).map(|_| draw(&mut rng)).collect();
            let lambda = Matrix::from_fn(n, n, |i, j| if j <= i { draw(&mut rng) } else { F::zero() });
            ENParams::new(n, a, alpha, gamma, lambda)
        })
        .collect()
}

pub fn sweep<F: Field>(args: &SweepArgs) -> Result<VerdictReport> {
    let points = if args.h4_grid {
        h4_grid::<F>()?
    } else {
        let seed = args
            .seed
            .ok_or_else(|| Error::InvalidParameter("random sweeps need --seed (or use --h4-grid)".into()))?;
        let alphas = args.alpha.iter().map(|a| parse_scalar::<F>(a)).collect::<Result<Vec<_>>>()?;
        random_points(args.n, args.points, seed, args.range, &alphas)?
    };
    let input = if args.h4_grid {
        json!({"grid": "h4", "points": points.len()})
    } else {
        json!({
            "n": args.n,
            "points": args.points,
            "seed": args.seed,
            "range": args.range,
            "alpha": args.alpha,
        })
    };
    let mut report = VerdictReport::new("sweep", F::field_name(), input);
    let results: Vec<Result<SweepPoint>> = points
        .par_iter()
        .map(|p| {
            let routes = en_routes(p, &args.routes)?;
            let (_, consistent) = settle(&routes);
            Ok(SweepPoint {
                params: params_json(p),
                routes,
                consistent,
            })
        })
        .collect();
    report.points = results.into_iter().collect::<Result<_>>()?;
    report.consistent = report.points.iter().all(|p| p.consistent);
    Ok(report)
}

pub fn export<F: Field>(n: Option<usize>, params: Option<&EnArgs>) -> Result<StructureConstantDocument> {
    match params {
        None => {
            let n = n.ok_or_else(|| Error::InvalidParameter("export needs --n or --a".into()))?;
            Ok(StructureConstantDocument::from_hopf(&build_en::<F>(n)?))
        }
        Some(args) => {
            let p = en_params::<F>(args)?;
            if n.is_some_and(|n| n != p.n) {
                return Err(Error::InvalidParameter(format!("--n does not match the {0}x{0} matrix A", p.n)));
            }
            let h = build_en::<F>(p.n)?;
            let mut doc = StructureConstantDocument::from_hopf(&h);
            doc.push_functional("sigma", FunctionalRole::Cocycle, &en_cocycle(&p)?);
            doc.push_functional("r_A", FunctionalRole::Rform, &rform_en(p.n, &p.a)?);
            doc.set_comodule_algebra(&build_clifford(&p)?, Ambient::Opposite);
            Ok(doc)
        }
    }
}
