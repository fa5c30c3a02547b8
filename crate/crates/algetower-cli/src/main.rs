//! Command-line front end: every engine operation as a scriptable
//! subcommand with deterministic JSON output (or a plain-text table).
//!
//! Exit status: 0 when the command succeeds and every requested check
//! passes, 1 when a check fails (a non-regular function, a failed suite
//! row), 2 for unusable input.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use algetower::algebra::rotate_vector;
use algetower::construct::{tensor_product, tower_compose};
use algetower::formats::{
    algebra_from_file, algebra_to_file, builtin_algebra, format_coord_list, function_from_file,
    matrix_from_file, matrix_to_file, parse_coord_list, tower_from_file, AlgebraFile, FunctionFile,
    TableFile, TowerFile,
};
use algetower::linmap::{matrix_to_standard, solve_commutant, standard_to_matrix};
use algetower::rational::{format_rational, parse_rational};
use algetower::regular::{
    builtin_function, check_regular, check_regular_everywhere, check_regular_via_standard,
    cr_like_at, cr_like_everywhere, standard_combination_polynomials, QuaternionPolynomial,
};
use algetower::suite::{run_all, seed_from_env, DEFAULT_SEED};
use algetower::{Algebra, Rat, RatMatrix};

#[derive(Parser)]
#[command(
    name = "algetower",
    version,
    about = "Exact engine for finite-dimensional algebras given by structural constants"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a builtin algebra table, or load and validate one from a file.
    Algebra {
        /// Builtin name (complex, H, quaternion, CxH, CxCxH) or a file path.
        #[arg(long)]
        algebra: String,
        /// Parameter a for --algebra quaternion.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Parameter b for --algebra quaternion.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Multiply two elements.
    Mul {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Left factor, comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        /// Right factor, comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Norm of a quaternion-type element.
    Norm {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Element coordinates.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Inverse of a quaternion-type element.
    Invert {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Element coordinates.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Rotate a 3-vector by conjugation with a quaternion.
    Rotate {
        /// Quaternion coordinates w,x,y,z.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Vector coordinates x,y,z.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Tensor product of two algebras.
    Tensor {
        /// Outer factor: builtin name or file path.
        #[arg(long)]
        outer: String,
        /// Inner factor: builtin name or file path.
        #[arg(long)]
        inner: String,
    },
    /// Compose a tower specification into a flat algebra table.
    Tower {
        /// Path to a tower specification file.
        #[arg(long)]
        spec: String,
    },
    /// Solve for all matrices commuting with left multiplications.
    Commutant {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Basis indices whose left multiplications generate the
        /// constraint; all of them when omitted.
        #[arg(long)]
        generators: Option<String>,
    },
    /// Convert between a coordinate matrix and standard components over
    /// E(R, a, b).
    Convert {
        /// Target representation.
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        b: String,
        /// Path to a table file, or inline JSON.
        #[arg(long)]
        input: String,
    },
    /// Check Fueter regularity and the relaxed derivative conditions.
    RegularCheck {
        /// Builtin function name (x, x2, x3, conj, fueter1, zero), a file
        /// path, or inline monomial JSON.
        #[arg(long = "fn")]
        function: String,
        /// Evaluation point w,x,y,z; defaults to the origin.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Decide the conditions identically instead of at a point.
        #[arg(long, default_value_t = false)]
        everywhere: bool,
    },
    /// Run the whole theorem verification suite.
    PaperSuite {
        /// Seed for the randomized property rows; falls back to the
        /// ALGETOWER_SEED environment variable, then to the default.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Matrix,
    Standard,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure(err.to_string())
    }
}

/// Rendered report plus whether every requested check passed.
struct Report {
    json: serde_json::Value,
    table: String,
    checks_passed: bool,
}

impl Report {
    fn of(value: impl Serialize, table: String) -> Result<Self, Failure> {
        Ok(Report {
            json: serde_json::to_value(value)?,
            table,
            checks_passed: true,
        })
    }

    fn with_verdict(mut self, passed: bool) -> Self {
        self.checks_passed = passed;
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(report) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("valid json")
                ),
                Format::Table => print!("{}", report.table),
            }
            if report.checks_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(message)) => {
            match format {
                Format::Json => eprintln!("{}", serde_json::json!({ "error": message })),
                Format::Table => eprintln!("error: {message}"),
            }
            ExitCode::from(2)
        }
    }
}

fn load_algebra(spec: &str, a: Option<&str>, b: Option<&str>) -> Result<Algebra, Failure> {
    if spec == "quaternion" {
        let a = a.ok_or_else(|| Failure("--algebra quaternion requires --a".into()))?;
        let b = b.ok_or_else(|| Failure("--algebra quaternion requires --b".into()))?;
        return Ok(Algebra::quaternion(parse_rational(a)?, parse_rational(b)?)?);
    }
    if let Some(builtin) = builtin_algebra(spec) {
        return Ok(builtin);
    }
    let text = fs::read_to_string(spec).map_err(|e| {
        Failure(format!(
            "{spec:?} is not a builtin algebra name and could not be read as a file: {e}"
        ))
    })?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    Ok(algebra_from_file(&file)?)
}

fn parse_fixed<const N: usize>(text: &str, what: &str) -> Result<[Rat; N], Failure> {
    let coords = parse_coord_list(text)?;
    let len = coords.len();
    coords
        .try_into()
        .map_err(|_| Failure(format!("{what} needs {N} coordinates, got {len}")))
}

fn read_path_or_inline(input: &str) -> Result<String, Failure> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(input.to_string());
    }
    fs::read_to_string(input).map_err(|e| Failure(format!("cannot read {input:?}: {e}")))
}

fn algebra_table(file: &AlgebraFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim: {}", file.dim);
    let _ = writeln!(out, "labels: {}", file.labels.join(", "));
    let _ = writeln!(out, "nonzero constants (k, i, j, value):");
    for (k, i, j, v) in &file.constants {
        let _ = writeln!(out, "  C[{k}][{i}][{j}] = {v}");
    }
    out
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Algebra { algebra, a, b } => {
            let table = load_algebra(&algebra, a.as_deref(), b.as_deref())?;
            let file = algebra_to_file(&table);
            let rendered = algebra_table(&file);
            Report::of(file, rendered)
        }
        Command::Mul {
            algebra,
            a,
            b,
            lhs,
            rhs,
        } => {
            let table = load_algebra(&algebra, a.as_deref(), b.as_deref())?;
            let x = table.element(parse_coord_list(&lhs)?)?;
            let y = table.element(parse_coord_list(&rhs)?)?;
            let product = x.mul(&y)?;

            #[derive(Serialize)]
            struct Output {
                product: Vec<String>,
            }
            let coords = format_coord_list(product.coords());
            let rendered = format!("product: {}\n", coords.join(", "));
            Report::of(Output { product: coords }, rendered)
        }
        Command::Norm { algebra, a, b, x } => {
            let table = load_algebra(&algebra, a.as_deref(), b.as_deref())?;
            let x = table.element(parse_coord_list(&x)?)?;
            let norm = x.norm_sq()?;

            #[derive(Serialize)]
            struct Output {
                norm_sq: String,
            }
            let text = format_rational(&norm);
            let rendered = format!("norm_sq: {text}\n");
            Report::of(Output { norm_sq: text }, rendered)
        }
        Command::Invert { algebra, a, b, x } => {
            let table = load_algebra(&algebra, a.as_deref(), b.as_deref())?;
            let x = table.element(parse_coord_list(&x)?)?;
            let inverse = x.invert()?;

            #[derive(Serialize)]
            struct Output {
                inverse: Vec<String>,
            }
            let coords = format_coord_list(inverse.coords());
            let rendered = format!("inverse: {}\n", coords.join(", "));
            Report::of(Output { inverse: coords }, rendered)
        }
        Command::Rotate { q, v } => {
            let h = Algebra::h();
            let q = h.element(parse_coord_list(&q)?)?;
            let v: [Rat; 3] = parse_fixed(&v, "--v")?;
            let rotated = rotate_vector(&q, &v)?;

            #[derive(Serialize)]
            struct Output {
                rotated: Vec<String>,
            }
            let coords = format_coord_list(&rotated);
            let rendered = format!("rotated: {}\n", coords.join(", "));
            Report::of(Output { rotated: coords }, rendered)
        }
        Command::Tensor { outer, inner } => {
            let outer = load_algebra(&outer, None, None)?;
            let inner = load_algebra(&inner, None, None)?;
            let file = algebra_to_file(&tensor_product(&outer, &inner));
            let rendered = algebra_table(&file);
            Report::of(file, rendered)
        }
        Command::Tower { spec } => {
            let text = fs::read_to_string(&spec)
                .map_err(|e| Failure(format!("cannot read {spec:?}: {e}")))?;
            let file: TowerFile = serde_json::from_str(&text)?;
            let composed = tower_compose(&tower_from_file(&file)?)?;
            let file = algebra_to_file(&composed);
            let rendered = algebra_table(&file);
            Report::of(file, rendered)
        }
        Command::Commutant {
            algebra,
            a,
            b,
            generators,
        } => {
            let table = load_algebra(&algebra, a.as_deref(), b.as_deref())?;
            let generator_matrices = match generators {
                None => (0..table.dim())
                    .map(|i| table.basis_element(i).left_mul_matrix())
                    .collect(),
                Some(list) => {
                    let mut parsed = Vec::new();
                    for part in list.split(',') {
                        let idx: usize = part
                            .trim()
                            .parse()
                            .map_err(|_| Failure(format!("bad generator index {part:?}")))?;
                        if idx >= table.dim() {
                            return Err(Failure(format!(
                                "generator index {idx} out of range for dimension {}",
                                table.dim()
                            )));
                        }
                        parsed.push(table.basis_element(idx).left_mul_matrix());
                    }
                    parsed
                }
            };
            let commutant = solve_commutant(&table, &generator_matrices)?;

            #[derive(Serialize)]
            struct Output {
                dimension: usize,
                basis: Vec<Vec<Vec<String>>>,
                relations: Vec<String>,
            }
            let relations = commutant.relations.render();
            let basis: Vec<Vec<Vec<String>>> = commutant
                .basis
                .iter()
                .map(|m| matrix_to_file(m).rows)
                .collect();
            let mut rendered = format!("dimension: {}\nrelations:\n", commutant.dimension);
            for r in &relations {
                let _ = writeln!(rendered, "  {r}");
            }
            Report::of(
                Output {
                    dimension: commutant.dimension,
                    basis,
                    relations,
                },
                rendered,
            )
        }
        Command::Convert { to, a, b, input } => {
            let alg = Algebra::quaternion(parse_rational(&a)?, parse_rational(&b)?)?;
            let text = read_path_or_inline(&input)?;
            let file: TableFile = serde_json::from_str(&text)?;
            let table = matrix_from_file(&file)?;
            let result: RatMatrix = match to {
                ConvertTarget::Matrix => {
                    standard_to_matrix(&algetower::linmap::StandardComponents::new(table), &alg)?
                }
                ConvertTarget::Standard => matrix_to_standard(&table, &alg)?.table().clone(),
            };
            let file = matrix_to_file(&result);
            let mut rendered = String::new();
            for row in &file.rows {
                let _ = writeln!(rendered, "{}", row.join("  "));
            }
            Report::of(file, rendered)
        }
        Command::RegularCheck {
            function,
            point,
            everywhere,
        } => regular_check(&function, point.as_deref(), everywhere),
        Command::PaperSuite { seed } => {
            let seed = seed.or_else(seed_from_env).unwrap_or(DEFAULT_SEED);
            let checks = run_all(seed);

            #[derive(Serialize)]
            struct Row {
                theorem: String,
                id: String,
                passed: bool,
                cases: usize,
                detail: String,
            }
            #[derive(Serialize)]
            struct Output {
                seed: u64,
                passed: bool,
                rows: Vec<Row>,
            }
            let passed = checks.iter().all(|c| c.passed);
            let rows: Vec<Row> = checks
                .iter()
                .map(|c| Row {
                    theorem: c.theorem.to_string(),
                    id: c.id.to_string(),
                    passed: c.passed,
                    cases: c.cases,
                    detail: c.detail.clone(),
                })
                .collect();

            let mut rendered = format!("seed: {seed}\n");
            for row in &rows {
                let _ = writeln!(
                    rendered,
                    "{:<12} {:<34} {:>5}  {}",
                    row.theorem,
                    row.id,
                    if row.passed { "PASS" } else { "FAIL" },
                    row.detail
                );
            }
            let _ = writeln!(
                rendered,
                "{}",
                if passed {
                    "all rows PASS"
                } else {
                    "some rows FAILED"
                }
            );
            Ok(Report::of(Output { seed, passed, rows }, rendered)?.with_verdict(passed))
        }
    }
}

#[derive(Serialize)]
struct Condition {
    holds: bool,
    residuals: Vec<String>,
}

#[derive(Serialize)]
struct PairCondition {
    holds: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct RegularCheckOutput {
    function: String,
    mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    regular: bool,
    /// The four coordinate residuals of the regularity system.
    coordinate_system: Condition,
    /// The quaternion value of the regularity operator.
    operator: Condition,
    /// The four standard-component combinations (each is -1/2 of the
    /// corresponding coordinate residual).
    component_combinations: Condition,
    /// Equal diagonal partials.
    diagonal_condition: PairCondition,
    /// Antisymmetric off-diagonal partials.
    antisymmetry_condition: PairCondition,
}

fn load_function(spec: &str) -> Result<QuaternionPolynomial<Rat>, Failure> {
    if let Some(f) = builtin_function(spec) {
        return Ok(f);
    }
    let text = read_path_or_inline(spec).map_err(|e| {
        Failure(format!(
            "{spec:?} is not a builtin function name and is not readable: {}",
            e.0
        ))
    })?;
    let file: FunctionFile = serde_json::from_str(&text)?;
    Ok(function_from_file(&file)?)
}

fn regular_check(function: &str, point: Option<&str>, everywhere: bool) -> Result<Report, Failure> {
    let f = load_function(function)?;
    let output = if everywhere {
        let (regular, residuals) = check_regular_everywhere(&f);
        let combos = standard_combination_polynomials(&f)?;
        let cr = cr_like_everywhere(&f);
        RegularCheckOutput {
            function: function.to_string(),
            mode: "everywhere".into(),
            point: None,
            regular,
            coordinate_system: Condition {
                holds: regular,
                residuals: residuals.iter().map(|p| p.to_string()).collect(),
            },
            operator: Condition {
                holds: regular,
                residuals: residuals.iter().map(|p| p.to_string()).collect(),
            },
            component_combinations: Condition {
                holds: combos.iter().all(|p| p.is_zero()),
                residuals: combos.iter().map(|p| p.to_string()).collect(),
            },
            diagonal_condition: PairCondition {
                holds: cr.diagonal_equal,
                failures: cr
                    .diagonal_failures
                    .iter()
                    .map(|(i, j, r)| format!("dy{i}/dx{i} - dy{j}/dx{j} = {r}"))
                    .collect(),
            },
            antisymmetry_condition: PairCondition {
                holds: cr.antisymmetric,
                failures: cr
                    .antisymmetry_failures
                    .iter()
                    .map(|(i, j, r)| format!("dy{i}/dx{j} + dy{j}/dx{i} = {r}"))
                    .collect(),
            },
        }
    } else {
        let p: [Rat; 4] = match point {
            Some(text) => parse_fixed(text, "--point")?,
            None => std::array::from_fn(|_| Rat::from_integer(0.into())),
        };
        let report = check_regular(&f, &p);
        let std_report = check_regular_via_standard(&f, &p)?;
        let cr = cr_like_at(&f, &p);
        RegularCheckOutput {
            function: function.to_string(),
            mode: "point".into(),
            point: Some(format_coord_list(&p)),
            regular: report.regular,
            coordinate_system: Condition {
                holds: report.regular,
                residuals: format_coord_list(&report.system),
            },
            operator: Condition {
                holds: report
                    .operator
                    .iter()
                    .all(|r| r == &Rat::from_integer(0.into())),
                residuals: format_coord_list(&report.operator),
            },
            component_combinations: Condition {
                holds: std_report.regular,
                residuals: format_coord_list(&std_report.combinations),
            },
            diagonal_condition: PairCondition {
                holds: cr.diagonal_equal,
                failures: cr
                    .diagonal_failures
                    .iter()
                    .map(|(i, j, r)| format!("dy{i}/dx{i} - dy{j}/dx{j} = {}", format_rational(r)))
                    .collect(),
            },
            antisymmetry_condition: PairCondition {
                holds: cr.antisymmetric,
                failures: cr
                    .antisymmetry_failures
                    .iter()
                    .map(|(i, j, r)| format!("dy{i}/dx{j} + dy{j}/dx{i} = {}", format_rational(r)))
                    .collect(),
            },
        }
    };

    let mut rendered = format!("function: {}\nmode: {}\n", output.function, output.mode);
    if let Some(p) = &output.point {
        let _ = writeln!(rendered, "point: {}", p.join(", "));
    }
    let _ = writeln!(rendered, "regular: {}", output.regular);
    let _ = writeln!(
        rendered,
        "coordinate system residuals: {}",
        output.coordinate_system.residuals.join("; ")
    );
    let _ = writeln!(
        rendered,
        "component combinations: {}",
        output.component_combinations.residuals.join("; ")
    );
    let _ = writeln!(
        rendered,
        "diagonal condition: {}",
        if output.diagonal_condition.holds {
            "holds"
        } else {
            "fails"
        }
    );
    for f in &output.diagonal_condition.failures {
        let _ = writeln!(rendered, "  {f}");
    }
    let _ = writeln!(
        rendered,
        "antisymmetry condition: {}",
        if output.antisymmetry_condition.holds {
            "holds"
        } else {
            "fails"
        }
    );
    for f in &output.antisymmetry_condition.failures {
        let _ = writeln!(rendered, "  {f}");
    }

    let regular = output.regular;
    Ok(Report::of(output, rendered)?.with_verdict(regular))
}
