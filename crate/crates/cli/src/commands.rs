use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use ministokes::analysis::{error_ratios, ConvergenceStudy, ErrorReport};
use ministokes::benchmarks::{problem, verify_manufactured, ManufacturedTolerances, NUM_PROBLEMS};
use ministokes::mesh::io::{load_mesh, save_mesh, write_mesh};
use ministokes::mesh::{generate_mesh_with, DistMeshParams, MeshQualityReport, HISTOGRAM_BINS};
use ministokes::study::{solve_on_mesh, solve_problem};

use crate::args::{check_h0, check_problem, MeshArgs, OutputArgs, SolveArgs, StudyArgs, StudyConfig, Table1Args, VerifyArgs};
use crate::output::{self, num, LevelRow, RateRow};
use crate::CliError;

pub fn mesh(a: &MeshArgs) -> Result<(), CliError> {
    check_problem(a.problem)?;
    check_h0(a.h0)?;
    let p = problem(a.problem)?;
    let params = DistMeshParams {
        seed: a.seed,
        ..DistMeshParams::default()
    };
    let mesh = generate_mesh_with(p.domain, a.h0, &params)?;
    let q = MeshQualityReport::new(&mesh)?;
    let mut summary = String::new();
    summary += &format!("vertices = {}\ntriangles = {}\n", mesh.num_vertices(), mesh.num_triangles());
    summary += &format!("h = {}\n", num(mesh.mesh_parameter_h()));
    summary += &format!("min_q1 = {}\nmean_q1 = {}\n", num(q.min_q1), num(q.mean_q1));
    summary += &format!("min_q2 = {}\nmean_q2 = {}\n", num(q.min_q2), num(q.mean_q2));
    summary += "bin_lo,bin_hi,count_q1,count_q2\n";
    for b in 0..HISTOGRAM_BINS {
        let lo = b as f64 / HISTOGRAM_BINS as f64;
        let hi = (b + 1) as f64 / HISTOGRAM_BINS as f64;
        summary += &format!("{lo:.2},{hi:.2},{},{}\n", q.hist_q1[b], q.hist_q2[b]);
    }
    match &a.out {
        Some(path) => {
            save_mesh(&mesh, path)?;
            print!("{summary}");
        }
        None => {
            write_mesh(&mesh, io::stdout().lock())?;
            eprint!("{summary}");
        }
    }
    Ok(())
}

pub fn solve(a: &SolveArgs) -> Result<(), CliError> {
    check_problem(a.problem)?;
    let p = problem(a.problem)?;
    let options = a.solver.options()?;
    let level = match (&a.mesh_file, a.h0) {
        (Some(path), _) => {
            let mesh = load_mesh(path)?;
            let d = mesh.domain;
            let tol = 1e-12 * p.domain.max_extent();
            let same = [(d.ax, p.domain.ax), (d.bx, p.domain.bx), (d.ay, p.domain.ay), (d.by, p.domain.by)]
                .iter()
                .all(|(x, y)| (x - y).abs() <= tol);
            if !same {
                return Err(CliError::Usage(format!(
                    "mesh covers [{}, {}] x [{}, {}], problem {} needs [{}, {}] x [{}, {}]",
                    d.ax, d.bx, d.ay, d.by, p.id, p.domain.ax, p.domain.bx, p.domain.ay, p.domain.by
                )));
            }
            solve_on_mesh(&p, mesh, &options)?
        }
        (None, Some(h0)) => {
            check_h0(h0)?;
            solve_problem(&p, h0, &options)?
        }
        (None, None) => return Err(CliError::Usage("either --h0 or --mesh-file is required".into())),
    };
    let r = &level.errors;
    print!("{}", output::report_text(r));
    if let Some(path) = &a.out {
        serde_json::to_writer_pretty(output::create(path)?, r)?;
    }
    if r.converged {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "solver stopped at relative residual {:e} after {} iterations",
            r.residual, r.iterations
        )))
    }
}

pub fn study(a: &StudyArgs) -> Result<(), CliError> {
    let config = StudyConfig::new(a.problem.clone(), a.h0.clone(), &a.solver)?;
    run_study(&config, &a.output)
}

pub fn table1(a: &Table1Args) -> Result<(), CliError> {
    let config = StudyConfig::new((1..=NUM_PROBLEMS).collect(), a.h0.clone(), &a.solver)?;
    run_study(&config, &a.output)
}

#[derive(Serialize)]
struct Sidecar<'a> {
    program: &'static str,
    version: &'static str,
    config: &'a StudyConfig,
    studies: Vec<ConvergenceStudy>,
    failures: Vec<String>,
}

fn run_study(config: &StudyConfig, out: &OutputArgs) -> Result<(), CliError> {
    let jobs: Vec<(usize, f64)> = config
        .problems
        .iter()
        .flat_map(|&p| config.h0.iter().map(move |&h| (p, h)))
        .collect();
    let rows: Vec<LevelRow> = jobs
        .par_iter()
        .map(|&(id, h0)| LevelRow {
            problem: id,
            h0,
            outcome: problem(id)
                .and_then(|p| solve_problem(&p, h0, &config.options))
                .map(|l| l.errors)
                .map_err(|e| e.to_string()),
        })
        .collect();

    let mut rates = Vec::new();
    let mut studies = Vec::new();
    let mut ratios = Vec::new();
    for &id in &config.problems {
        let good: Vec<ErrorReport> = rows
            .iter()
            .filter(|r| r.problem == id && !r.failed())
            .filter_map(|r| r.outcome.as_ref().ok().cloned())
            .collect();
        for r in &good {
            if let Ok(q) = error_ratios(r) {
                ratios.push((id, r.h, q));
            }
        }
        let levels = good.len();
        let outcome = match ConvergenceStudy::new(id, good) {
            Ok(s) => {
                let r = s.rates;
                studies.push(s);
                Ok(r)
            }
            Err(e) => Err(e.to_string()),
        };
        rates.push(RateRow {
            problem: id,
            levels,
            outcome,
        });
    }

    let mut failures: Vec<String> = rows
        .iter()
        .filter(|r| r.failed())
        .map(|r| match &r.outcome {
            Ok(e) => format!("problem {} h0 {}: not converged (residual {:e})", r.problem, r.h0, e.residual),
            Err(m) => format!("problem {} h0 {}: {m}", r.problem, r.h0),
        })
        .collect();
    failures.extend(
        rates
            .iter()
            .filter_map(|r| r.outcome.as_ref().err().map(|m| format!("problem {} rates: {m}", r.problem))),
    );

    match &out.out {
        Some(dir) => {
            output::create_dir(dir)?;
            output::write_results(&rows, output::create(&dir.join("results.csv"))?)?;
            output::write_rates(&rates, output::create(&dir.join("rates.csv"))?)?;
            output::write_ratios(&ratios, output::create(&dir.join("ratios.csv"))?)?;
            if out.json {
                let sidecar = Sidecar {
                    program: env!("CARGO_PKG_NAME"),
                    version: env!("CARGO_PKG_VERSION"),
                    config,
                    studies,
                    failures: failures.clone(),
                };
                serde_json::to_writer_pretty(output::create(&dir.join("study.json"))?, &sidecar)?;
            }
            print_rates(&rates);
        }
        None => {
            let mut stdout = io::stdout().lock();
            output::write_results(&rows, &mut stdout)?;
            writeln!(stdout).map_err(|e| output::io_error("stdout", e))?;
            output::write_rates(&rates, &mut stdout)?;
        }
    }
    for f in &failures {
        eprintln!("failure: {f}");
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} failure(s)", failures.len())))
    }
}

fn print_rates(rates: &[RateRow]) {
    println!("problem   u L2   u H1   P L2  ihu L2 ihu H1  ul L2  ul H1 div uh div uhl");
    for r in rates {
        match &r.outcome {
            Ok(v) => {
                let cols: String = output::rate_values(v).iter().map(|x| format!(" {x:6.2}")).collect();
                println!("{:7}{cols}", r.problem);
            }
            Err(m) => println!("{:7} {m}", r.problem),
        }
    }
}

pub fn verify(a: &VerifyArgs) -> Result<(), CliError> {
    let ids = a.problem.clone().unwrap_or_else(|| (1..=NUM_PROBLEMS).collect());
    for &id in &ids {
        check_problem(id)?;
    }
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let tol = ManufacturedTolerances::default();
    let mut failed = Vec::new();
    for id in ids {
        let r = verify_manufactured(&problem(id)?, a.samples);
        let ok = r.passes(&tol);
        println!("problem = {id}");
        println!("samples = {}", r.samples);
        println!("max_momentum_residual = {}", num(r.max_momentum_residual));
        println!("max_divergence = {}", num(r.max_divergence));
        println!("pressure_mean = {}", num(r.pressure_mean));
        println!("max_boundary_mismatch = {}", num(r.max_boundary_mismatch));
        println!("max_gradient_mismatch = {}", num(r.max_gradient_mismatch));
        println!("pass = {ok}");
        println!();
        if !ok {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("tolerance exceeded for problem(s) {failed:?}")))
    }
}
