//! Family-name resolution and the `table`/`eval` commands.

use std::collections::BTreeMap;
use std::process::ExitCode;

use apbern::exactq::{GaussRational, MultiPoly, PolyError};
use apbern::families::{
    apostol_bernoulli_number_closed, bernoulli_number, cs_closed_form, genocchi_series,
    FamilyError, FamilySpec, Trig, UFactory,
};
use apbern::fps::KernelSpec;
use num_traits::One;

use crate::output::{self, Row, Table};
use crate::{CliError, EvalArgs, FamilyArgs, Format, TableArgs};

pub enum ResolvedFamily {
    BernoulliNumber,
    ApostolClosed { lambda: GaussRational },
    Member(FamilySpec),
    Genocchi(KernelSpec),
    CClosed,
    SClosed,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain(msg: impl std::fmt::Display) -> CliError {
    CliError::Domain(msg.to_string())
}

fn kernel_of(args: &FamilyArgs, mu: GaussRational) -> Result<KernelSpec, CliError> {
    KernelSpec::new(args.v, args.lambda.clone(), mu).map_err(domain)
}

pub fn resolve(args: &FamilyArgs) -> Result<ResolvedFamily, CliError> {
    let u = || {
        UFactory::by_name(&args.u, args.m_param).map_err(|e| match e {
            FamilyError::UnknownFactory(_) => usage(e.to_string()),
            other => domain(other),
        })
    };
    Ok(match args.family.as_str() {
        "bernoulli-number" => ResolvedFamily::BernoulliNumber,
        "bernoulli-poly" => ResolvedFamily::Member(FamilySpec::new(
            KernelSpec::new(1, GaussRational::one(), GaussRational::from_int(-1))
                .expect("valid"),
            UFactory::One,
            Trig::None,
        )),
        "apostol-bernoulli-closed" => ResolvedFamily::ApostolClosed {
            lambda: args.lambda.clone(),
        },
        "apostol-bernoulli" => ResolvedFamily::Member(FamilySpec::new(
            kernel_of(args, GaussRational::from_int(-1))?,
            u()?,
            Trig::None,
        )),
        "param-plain" => ResolvedFamily::Member(FamilySpec::new(
            kernel_of(args, args.mu.clone())?,
            u()?,
            Trig::None,
        )),
        "param-c" => ResolvedFamily::Member(FamilySpec::new(
            kernel_of(args, args.mu.clone())?,
            u()?,
            Trig::Cos,
        )),
        "param-s" => ResolvedFamily::Member(FamilySpec::new(
            kernel_of(args, args.mu.clone())?,
            u()?,
            Trig::Sin,
        )),
        "apostol-genocchi" => {
            ResolvedFamily::Genocchi(kernel_of(args, args.mu.clone())?)
        }
        "c-closed" => ResolvedFamily::CClosed,
        "s-closed" => ResolvedFamily::SClosed,
        other => return Err(usage(format!("unknown family `{other}`"))),
    })
}

fn family_params(args: &FamilyArgs) -> Vec<(String, String)> {
    vec![
        ("v".into(), args.v.to_string()),
        ("lambda".into(), args.lambda.to_canonical_string()),
        ("mu".into(), args.mu.to_canonical_string()),
        ("u".into(), args.u.clone()),
    ]
}

/// One polynomial per row, computed from a single series build.
fn member_rows(spec: &FamilySpec, max_n: usize) -> Result<Vec<Row>, CliError> {
    let vars = spec.default_varset();
    let series = spec.series(&vars, max_n + 2).map_err(domain)?;
    (0..=max_n)
        .map(|n| {
            let p = series.extract_family(n).map_err(domain)?;
            Ok(Row::poly(n, &p))
        })
        .collect()
}

pub fn cmd_table(args: &TableArgs) -> Result<ExitCode, CliError> {
    let family = resolve(&args.family)?;
    let mut footnote = None;

    let rows: Vec<Row> = match &family {
        ResolvedFamily::BernoulliNumber => (0..=args.n)
            .map(|n| Row::scalar(n, &bernoulli_number(n)))
            .collect(),
        ResolvedFamily::ApostolClosed { lambda } => {
            if args.n > 5 {
                return Err(usage(format!(
                    "closed forms exist for n <= 5, requested {}",
                    args.n
                )));
            }
            if args.format == Format::Latex {
                // The closed forms are emitted symbolically in lambda.
                (0..=args.n).map(Row::closed_form).collect()
            } else if lambda.is_one() {
                // The closed forms have a pole at lambda = 1; table
                // emission routes to the Bernoulli branch.
                footnote = Some(
                    "lambda = 1 is a pole of the closed forms; values shown are the \
                     Bernoulli-branch numbers B_n"
                        .to_string(),
                );
                (0..=args.n)
                    .map(|n| Row::scalar(n, &bernoulli_number(n)))
                    .collect()
            } else {
                (0..=args.n)
                    .map(|n| {
                        let value =
                            apostol_bernoulli_number_closed(n, lambda).map_err(domain)?;
                        Ok(Row::scalar(n, &value))
                    })
                    .collect::<Result<_, CliError>>()?
            }
        }
        ResolvedFamily::Member(spec) => member_rows(spec, args.n)?,
        ResolvedFamily::Genocchi(kernel) => {
            let vars = apbern::exactq::VarSet::new(["x"]).expect("valid");
            let series = genocchi_series(kernel, &vars, "x", args.n + 2).map_err(domain)?;
            (0..=args.n)
                .map(|n| {
                    let p = series.extract_family(n).map_err(domain)?;
                    Ok(Row::poly(n, &p))
                })
                .collect::<Result<_, CliError>>()?
        }
        ResolvedFamily::CClosed => (0..=args.n)
            .map(|n| Row::poly(n, &cs_closed_form(n).0))
            .collect(),
        ResolvedFamily::SClosed => (0..=args.n)
            .map(|n| Row::poly(n, &cs_closed_form(n).1))
            .collect(),
    };

    let table = Table {
        family: args.family.family.clone(),
        params: family_params(&args.family),
        rows,
        footnote,
    };
    print!("{}", output::render_table(args.format, &table));
    Ok(ExitCode::SUCCESS)
}

fn eval_member(poly: &MultiPoly, args: &EvalArgs) -> Result<GaussRational, CliError> {
    let mut assignment: BTreeMap<&str, GaussRational> = BTreeMap::new();
    if let Some(x) = &args.x {
        assignment.insert("x", x.clone());
    }
    if let Some(y) = &args.y {
        assignment.insert("y", y.clone());
    }
    if let Some(z) = &args.z {
        assignment.insert("z", z.clone());
    }
    poly.eval(&assignment).map_err(|e| match e {
        PolyError::UnboundVariable(name) => {
            usage(format!("missing variable `{name}` for this family (pass --{name} p/q)"))
        }
        other => domain(other),
    })
}

pub fn cmd_eval(args: &EvalArgs) -> Result<ExitCode, CliError> {
    let family = resolve(&args.family)?;
    let value = match &family {
        ResolvedFamily::BernoulliNumber => bernoulli_number(args.n),
        ResolvedFamily::ApostolClosed { lambda } => {
            if args.n > 5 {
                return Err(usage(format!(
                    "closed forms exist for n <= 5, requested {}",
                    args.n
                )));
            }
            apostol_bernoulli_number_closed(args.n, lambda).map_err(domain)?
        }
        ResolvedFamily::Member(spec) => {
            let poly = spec.member(args.n).map_err(domain)?;
            eval_member(&poly, args)?
        }
        ResolvedFamily::Genocchi(kernel) => {
            let vars = apbern::exactq::VarSet::new(["x"]).expect("valid");
            let series = genocchi_series(kernel, &vars, "x", args.n + 2).map_err(domain)?;
            let poly = series.extract_family(args.n).map_err(domain)?;
            eval_member(&poly, args)?
        }
        ResolvedFamily::CClosed => eval_member(&cs_closed_form(args.n).0, args)?,
        ResolvedFamily::SClosed => eval_member(&cs_closed_form(args.n).1, args)?,
    };
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}
