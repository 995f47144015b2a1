use std::any::Any;

use anyhow::anyhow;
use heunforge::apps::*;
use heunforge::che::*;
use heunforge::heun::*;
use heunforge::nu::{enumerate_branches, Mode, NuEquation, NuError, PhiFactor, SearchOptions};
use heunforge::poly::{Backend, ExactComplex, Poly, Scalar, C64};
use heunforge::state::Eigenstate;

use crate::params::{che_params, heun_for_class, heun_full};
use crate::report::{Cell, Report};
use crate::{AppCommand, EquationArgs, Failure, RunConfig, SolveArgs};

pub const TOL_NAMES: [&str; 5] = ["residual", "relation", "termination", "bethe", "catalog"];

pub fn default_tol(name: &str) -> f64 {
    match name {
        "relation" => 1e-9,
        _ => 1e-8,
    }
}

fn cell<S: Scalar>(s: &S) -> Cell {
    match (s as &dyn Any).downcast_ref::<ExactComplex>() {
        Some(e) => Cell::Exact(e.clone()),
        None => Cell::Complex(s.to_c64()),
    }
}

fn poly_cell<S: Scalar>(p: &Poly<S>) -> Cell {
    match (p as &dyn Any).downcast_ref::<Poly<ExactComplex>>() {
        Some(e) => Cell::exact_poly(e),
        None => Cell::poly(&p.to_c64()),
    }
}

fn phi_text(phi: &PhiFactor) -> String {
    let mut parts = Vec::new();
    if !phi.exponential_part.is_zero() {
        parts.push(format!("exp({})", phi.exponential_part));
    }
    for (z, e) in &phi.power_factors {
        if e.norm() == 0.0 {
            continue;
        }
        let base = if z.norm() == 0.0 {
            "z".to_string()
        } else {
            format!("(z - {})", Poly::constant(*z))
        };
        parts.push(format!("{base}^({})", Poly::constant(*e)));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

fn nu_failure(e: NuError) -> Failure {
    match e {
        NuError::DegreeBound { .. } | NuError::ZeroSigma => Failure::usage(e),
        other => Failure::none(other),
    }
}

fn heun_failure(e: HeunError) -> Failure {
    match e {
        HeunError::Fuchsian(_) | HeunError::Singularities(_) | HeunError::UnknownClass(_) => Failure::usage(e),
        HeunError::Nu(n) => nu_failure(n),
        other => Failure::none(other),
    }
}

fn che_failure(e: CheError) -> Failure {
    match e {
        CheError::UnknownClass(_) => Failure::usage(e),
        CheError::Nu(n) => nu_failure(n),
        other => Failure::none(other),
    }
}

pub fn classify(args: &EquationArgs, cfg: &RunConfig) -> Result<Report, Failure> {
    match cfg.backend {
        Backend::Exact => classify_with::<ExactComplex>(args, cfg),
        Backend::Float => classify_with::<C64>(args, cfg),
    }
}

fn classify_with<S: Scalar>(args: &EquationArgs, cfg: &RunConfig) -> Result<Report, Failure> {
    let src = &args.source;
    // catalog pi list and a label per entry, when the shape is known
    let (kind, eq, catalog): (&str, NuEquation<S>, Vec<(String, Poly<C64>)>) = if let Some(text) = &src.heun {
        let p = heun_full::<S>(text).map_err(Failure::usage)?;
        let labels = heun_pi_catalog(&p)
            .iter()
            .enumerate()
            .map(|(k, pi)| {
                let class = HeunClass::from_branch_index(k + 1).map_or("?", HeunClass::roman);
                (format!("{class} (pi{})", k + 1), pi.to_c64())
            })
            .collect();
        ("heun", heun_to_nu(&p), labels)
    } else if let Some(text) = &src.che {
        let (p, _) = che_params::<S>(text).map_err(Failure::usage)?;
        let labels = che_pi_catalog(&p)
            .iter()
            .enumerate()
            .map(|(k, pi)| (format!("pi{}", k + 1), pi.to_c64()))
            .collect();
        ("che", che_to_nu(&p), labels)
    } else {
        let parse = |what: &str, t: &Option<String>| -> Result<Poly<S>, Failure> {
            let t = t.as_deref().ok_or_else(|| Failure::usage(anyhow!("--{what} is required")))?;
            Poly::<S>::parse(t).map_err(|e| Failure::usage(anyhow!("--{what}: {e}")))
        };
        let sigma = parse("sigma", &src.sigma)?;
        let tau = parse("tau-tilde", &args.tau_tilde)?;
        let sigma_tilde = parse("sigma-tilde", &args.sigma_tilde)?;
        let mode = if args.classic { Mode::Classic } else { Mode::Extended };
        let eq = NuEquation::new(tau, sigma, sigma_tilde, mode).map_err(nu_failure)?;
        ("custom", eq, Vec::new())
    };
    let opts = SearchOptions {
        grid: cfg.grid,
        ..SearchOptions::default()
    };
    let branches = enumerate_branches(&eq, &opts).map_err(nu_failure)?;
    if branches.is_empty() {
        return Err(Failure::none(anyhow!("no admissible branches")));
    }
    let mut report = Report::new("classify", cfg.backend);
    report.field("equation", Cell::text(kind));
    report.field("tau_tilde", poly_cell(eq.tau_tilde()));
    report.field("sigma", poly_cell(eq.sigma()));
    report.field("sigma_tilde", poly_cell(eq.sigma_tilde()));
    report.field("branches", Cell::Int(branches.len() as i64));
    let mut worst: f64 = 0.0;
    for (i, b) in branches.iter().enumerate() {
        let mut row = vec![("branch".to_string(), Cell::Int(i as i64 + 1))];
        if !catalog.is_empty() {
            let scale = 1.0 + b.pi.max_abs();
            let (label, dist) = catalog
                .iter()
                .map(|(l, pi)| (l.clone(), (&b.pi - pi).max_abs() / scale))
                .min_by(|x, y| x.1.total_cmp(&y.1))
                .expect("catalog is nonempty");
            worst = worst.max(dist);
            row.push(("class".into(), Cell::text(label)));
        }
        row.push(("sign".into(), Cell::text(b.sign.symbol().to_string())));
        row.push(("g".into(), Cell::poly(&b.g)));
        row.push(("pi".into(), Cell::poly(&b.pi)));
        row.push(("tau".into(), Cell::poly(&b.tau)));
        row.push(("h".into(), Cell::poly(&b.h)));
        report.rows.push(row);
    }
    if !catalog.is_empty() {
        report.check("catalog", worst, cfg.tol("catalog"));
        report.check("branch_count", (branches.len() as f64 - 8.0).abs(), 0.0);
    }
    Ok(report)
}

pub fn solve(args: &SolveArgs, cfg: &RunConfig) -> Result<Report, Failure> {
    match cfg.backend {
        Backend::Exact => solve_with::<ExactComplex>(args, cfg),
        Backend::Float => solve_with::<C64>(args, cfg),
    }
}

fn state_row(s: &Eigenstate, accessory: &str, residual: f64) -> Vec<(String, Cell)> {
    vec![
        (accessory.into(), Cell::Complex(s.accessory)),
        ("polynomial".into(), Cell::poly(&s.polynomial)),
        ("roots".into(), Cell::List(s.roots().into_iter().map(Cell::Complex).collect())),
        ("phi".into(), Cell::text(phi_text(&s.phi))),
        ("residual".into(), Cell::Real(residual)),
    ]
}

fn solve_with<S: Scalar>(args: &SolveArgs, cfg: &RunConfig) -> Result<Report, Failure> {
    let mut report = Report::new("solve", cfg.backend);
    report.field("n", Cell::Int(args.n as i64));
    if let Some(text) = &args.heun {
        let class: HeunClass = args.class.parse().map_err(heun_failure)?;
        let p = heun_for_class::<S>(text, class, args.n).map_err(Failure::usage)?;
        report.field("equation", Cell::text("heun"));
        report.field("class", Cell::text(class.roman()));
        report.field("alpha", cell(&p.alpha));
        report.field("beta", cell(&p.beta));
        report.field("epsilon", cell(&p.epsilon));
        let relation = heun_class_relation(class, args.n, &p);
        report.field("relation", cell(&relation));
        let t = heun_termination_polynomial(&p, class, args.n).map_err(heun_failure)?;
        report.field("termination", poly_cell(&t));
        let qs = heun_accessory(&p, class, args.n).map_err(heun_failure)?;
        if qs.is_empty() {
            return Err(Failure::none(anyhow!("no accessory value gives a degree-{} polynomial", args.n)));
        }
        report.check("relation", relation.magnitude(), cfg.tol("relation"));
        for q in qs {
            let s = heun_eigenstate(&p, class, args.n, q).map_err(heun_failure)?;
            let ode = p.to_c64().with_q(q).ode();
            let r = s.residual_against(&ode, cfg.samples).map_err(|e| Failure::none(e))?;
            report.check(format!("residual q={}", Cell::Complex(q).display()), r, cfg.tol("residual"));
            report.rows.push(state_row(&s, "q", r));
        }
    } else if let Some(text) = &args.che {
        let class = parse_che_class(&args.class)?;
        let (mut p, has_nu) = che_params::<S>(text).map_err(Failure::usage)?;
        if !has_nu {
            p.nu = che_required_sum(class, args.n, &p) - p.mu.clone();
        }
        report.field("equation", Cell::text("che"));
        report.field("class", Cell::text(class.to_string()));
        report.field("mu+nu", cell(&p.mu_plus_nu()));
        let relation = che_class_relation(class, args.n, &p);
        report.field("relation", cell(&relation));
        let t = che_termination_polynomial(&p, class, args.n).map_err(che_failure)?;
        report.field("termination", poly_cell(&t));
        let mus = che_mu_values(&p, class, args.n).map_err(che_failure)?;
        if mus.is_empty() {
            return Err(Failure::none(anyhow!("no mu gives a degree-{} polynomial", args.n)));
        }
        report.check("relation", relation.magnitude(), cfg.tol("relation"));
        for mu in mus {
            let s = che_eigenstate(&p, class, args.n, mu).map_err(che_failure)?;
            let ode = p.to_c64().with_mu(mu).ode();
            let r = s.residual_against(&ode, cfg.samples).map_err(|e| Failure::none(e))?;
            report.check(format!("residual mu={}", Cell::Complex(mu).display()), r, cfg.tol("residual"));
            report.rows.push(state_row(&s, "mu", r));
        }
    }
    Ok(report)
}

fn parse_che_class(s: &str) -> Result<CheClass, Failure> {
    let t = s.trim().to_ascii_lowercase();
    let digits = t.strip_prefix("pi_e").or_else(|| t.strip_prefix("pi")).unwrap_or(&t);
    let k: usize = digits
        .parse()
        .map_err(|_| Failure::usage(anyhow!("unknown class `{s}` (expected pi1..pi8)")))?;
    CheClass::new(k).map_err(Failure::usage)
}

pub fn app(cmd: &AppCommand, cfg: &RunConfig) -> Result<Report, Failure> {
    match cmd {
        AppCommand::Coulomb3s { n, m, gamma } => coulomb(*n, *m, *gamma, cfg),
        AppCommand::ElectronsSphere { n, gamma, delta } => electrons(*n, *gamma, *delta, cfg),
        AppCommand::DoubleWell { n, d, u0, parity } => {
            let parity: Parity = parity.parse().map_err(Failure::usage)?;
            double_well(DoubleWellInput { n: *n, d: *d, u0: *u0, parity }, cfg)
        }
    }
}

fn coulomb(n: usize, m: i64, gamma: f64, cfg: &RunConfig) -> Result<Report, Failure> {
    let input = Coulomb3SphereInput { n, m, gamma_charge: gamma };
    let exact = cfg.backend == Backend::Exact && gamma == 0.0;
    let mut report = Report::new("app coulomb3s", if exact { Backend::Exact } else { Backend::Float });
    report.field("n", Cell::Int(n as i64));
    report.field("m", Cell::Int(m));
    report.field("gamma", Cell::Real(gamma));
    report.field("energy", Cell::Real(coulomb3s_energy(&input)));
    let tol = cfg.tol("relation");
    if exact {
        let (one, two) = coulomb3s_verify_exact(n, m);
        report.field("class_one", Cell::Exact(one.clone()));
        report.field("class_two", Cell::Exact(two.clone()));
        report.check("class_one", one.magnitude(), tol);
        report.check("class_two", two.magnitude(), tol);
    } else {
        let r = coulomb3s_verify(&input);
        report.field("class_one", Cell::Real(r.class_one));
        report.field("class_one_root", Cell::text(format!("{:?}", r.class_one_sign).to_lowercase()));
        report.field("class_two", Cell::Real(r.class_two));
        report.field("class_two_root", Cell::text(format!("{:?}", r.class_two_sign).to_lowercase()));
        report.check("class_one", r.class_one, tol);
        report.check("class_two", r.class_two, tol);
    }
    Ok(report)
}

fn electrons(n: usize, gamma: f64, delta: f64, cfg: &RunConfig) -> Result<Report, Failure> {
    let input = ElectronsSphereInput { n, gamma_param: gamma, delta_param: delta };
    let states = electrons_sphere_states(&input).map_err(app_failure)?;
    let Some(best) = states.last() else {
        return Err(Failure::none(anyhow!("no state with a positive radius for n = {n}")));
    };
    let mut report = Report::new("app electrons-sphere", Backend::Float);
    report.field("n", Cell::Int(n as i64));
    report.field("gamma", Cell::Real(gamma));
    report.field("delta", Cell::Real(delta));
    report.field("radius", Cell::Real(best.radius));
    report.field("energy", Cell::Real(best.energy));
    if let Some((r, e)) = electrons_closed_form(n, gamma, delta) {
        report.field("radius_closed_form", Cell::Real(r));
        report.field("energy_closed_form", Cell::Real(e));
        let tol = cfg.tol("relation");
        report.check("radius", (best.radius - r).abs() / (1.0 + r), tol);
        report.check("energy", (best.energy - e).abs() / (1.0 + e.abs()), tol);
    }
    let p = electrons_heun_params(&input).map_err(app_failure)?;
    for s in &states {
        let r = s
            .state
            .residual_against(&p.with_q(s.q).ode(), cfg.samples)
            .map_err(|e| Failure::none(e))?;
        report.check(format!("bethe R={}", s.radius), s.bethe, cfg.tol("bethe"));
        report.check(format!("residual R={}", s.radius), r, cfg.tol("residual"));
        report.rows.push(vec![
            ("radius".into(), Cell::Real(s.radius)),
            ("energy".into(), Cell::Real(s.energy)),
            ("q".into(), Cell::Complex(s.q)),
            ("roots".into(), Cell::List(s.roots.iter().copied().map(Cell::Complex).collect())),
            ("bethe".into(), Cell::Real(s.bethe)),
            ("residual".into(), Cell::Real(r)),
        ]);
    }
    Ok(report)
}

fn app_failure(e: AppError) -> Failure {
    match e {
        AppError::Input(_) => Failure::usage(e),
        AppError::Relation(_) => Failure { code: 4, error: e.into() },
        other => Failure::none(other),
    }
}

fn double_well(input: DoubleWellInput, cfg: &RunConfig) -> Result<Report, Failure> {
    let r = doublewell_verify(&input).map_err(app_failure)?;
    let mut report = Report::new("app double-well", Backend::Float);
    report.field("n", Cell::Int(input.n as i64));
    report.field("d", Cell::Real(input.d));
    report.field("u0", Cell::Real(input.u0));
    report.field("parity", Cell::text(format!("{:?}", input.parity).to_lowercase()));
    report.field("epsilon", Cell::Real(r.epsilon));
    report.field("epsilon_solved", Cell::Real(r.epsilon_solved));
    report.field("class", Cell::text(r.class.to_string()));
    report.field("relation", Cell::Real(r.relation));
    report.field("termination", Cell::Real(r.termination));
    report.check("relation", r.relation, cfg.tol("relation"));
    report.check(
        "epsilon",
        (r.epsilon_solved - r.epsilon).abs() / (1.0 + r.epsilon.abs()),
        cfg.tol("relation"),
    );
    report.check("termination", r.termination, cfg.tol("termination"));
    let p = doublewell_params(input.d, input.u0, r.epsilon);
    for &mu in &r.mu {
        let s = che_eigenstate(&p, r.class, input.n, mu).map_err(che_failure)?;
        let res = s
            .residual_against(&p.with_mu(mu).ode(), cfg.samples)
            .map_err(|e| Failure::none(e))?;
        report.check(format!("residual mu={}", Cell::Complex(mu).display()), res, cfg.tol("residual"));
        report.rows.push(state_row(&s, "mu", res));
    }
    Ok(report)
}
