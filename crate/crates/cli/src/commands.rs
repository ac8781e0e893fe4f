use std::collections::BTreeSet;
use std::fs;

use serde::Serialize;
use serde_json::{json, Value};

use bubblepat::basis::{inverse_basis_checked, inverse_basis_set_checked};
use bubblepat::cache::CountCache;
use bubblepat::diagram::render_diagram;
use bubblepat::operators::Operator;
use bubblepat::oracle::growth_estimate;
use bubblepat::perm::parse_permutation_set;
use bubblepat::verify::{run_suite, Suite};
use bubblepat::{
    classify, parse_permutation, BasisResult, ClassSpec, CrossCheck, Error, OperatorChain, Oracle, Outcome,
    Permutation,
};

use crate::args::{ApplyArgs, BasisArgs, ClassifyArgs, DiagramArgs, EnumerateArgs, VerifyArgs};
use crate::report::{exit, exit_code, ErrorPayload, Inputs};

pub enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) => exit_code(e),
            Failure::Usage(_) => exit::PARSE,
        }
    }

    pub fn payload(&self) -> ErrorPayload {
        match self {
            Failure::Core(e) => ErrorPayload::from_error(e),
            Failure::Usage(message) => ErrorPayload {
                kind: "Usage".into(),
                message: message.clone(),
                exit_code: exit::PARSE,
            },
        }
    }
}

/// What a command produced: JSON payload, text rendering and exit status.
pub struct Output {
    pub result: Value,
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn ok(result: impl Serialize, text: String) -> Self {
        Output {
            result: to_value(result),
            text,
            exit: exit::OK,
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report payloads serialize")
}

fn perm_list(set: &BTreeSet<Permutation>) -> String {
    set.iter().map(|p| p.values().iter().map(u32::to_string).collect::<String>()).collect::<Vec<_>>().join(", ")
}

pub fn apply(args: &ApplyArgs) -> Result<Output, Failure> {
    let p = parse_permutation(&args.perm)?;
    let chain: OperatorChain = args.chain.parse()?;
    let repeats = args.k.unwrap_or(1);

    let mut steps: Vec<(Option<Operator>, Permutation)> = vec![(None, p.clone())];
    let mut current = p;
    for _ in 0..repeats {
        for (op, image) in chain.trace(&current).into_iter().skip(1) {
            steps.push((op, image));
        }
        current = steps.last().expect("trace starts with the input").1.clone();
    }

    let mut text = String::new();
    if args.trace {
        for (op, image) in &steps {
            let label = match op {
                None => "start".to_string(),
                Some(Operator::BubblePass) => "B".to_string(),
                Some(Operator::StackPass) => "S".to_string(),
            };
            text.push_str(&format!("{label:<5} {image}\n"));
        }
    } else {
        text.push_str(&format!("{current}\n"));
    }
    let trace: Vec<Value> = steps
        .iter()
        .map(|(op, image)| json!({ "operator": op, "permutation": image }))
        .collect();
    let result = json!({
        "input": steps[0].1,
        "chain": chain,
        "repeats": repeats,
        "image": current,
        "trace": if args.trace { Value::Array(trace) } else { Value::Null },
    });
    Ok(Output::ok(result, text))
}

pub fn classify_cmd(args: &ClassifyArgs) -> Result<Output, Failure> {
    let p = parse_permutation(&args.perm)?;
    let class = classify(&p)?;
    let positions: Vec<String> = class.lr_maxima_positions.iter().map(usize::to_string).collect();
    let mut text = format!(
        "{p}\ncase: {}\ngood: {}\nleft-to-right maxima at positions: {}\n",
        class.case,
        class.good,
        positions.join(", ")
    );
    if let Some(r) = &class.reduced {
        text.push_str(&format!("reduces to: {r}\n"));
    }
    Ok(Output::ok(&class, text))
}

pub fn basis(args: &BasisArgs, oracle: &Oracle) -> Result<Output, Failure> {
    let is_set = args.input.contains(',');
    let check = match (args.verify, args.horizon) {
        (false, _) => CrossCheck::Off,
        (true, None) => CrossCheck::Auto,
        (true, Some(h)) => CrossCheck::Horizon(h),
    };
    let result: BasisResult = if is_set {
        let set = parse_permutation_set(&args.input)?;
        inverse_basis_set_checked(&set, check, oracle)?
    } else {
        let p = parse_permutation(&args.input)?;
        inverse_basis_checked(&p, check, oracle)?
    };

    let mut text = String::new();
    if let Some(class) = &result.case_used {
        text.push_str(&format!("case: {}\n", class.case));
    }
    match result.outcome {
        Outcome::Basis => {
            text.push_str(&format!("basis ({}): {}\n", result.basis.len(), perm_list(&result.basis)));
        }
        Outcome::NotAClass => {
            text.push_str("not a class\n");
            if let Some(w) = &result.witness {
                text.push_str(&format!("witness theta1: {}\nwitness theta2: {}\n", w.theta1, w.theta2));
            }
        }
    }
    if args.verify {
        text.push_str(&format!("cross-checked: {}\n", result.cross_checked));
    }
    Ok(Output::ok(&result, text))
}

pub fn enumerate(args: &EnumerateArgs, oracle: &Oracle) -> Result<Output, Failure> {
    let basis = parse_permutation_set(&args.basis)?;
    let spec = ClassSpec::new(&basis);
    let counts = match &args.cache {
        Some(dir) => CountCache::new(dir).count_av(oracle, &spec, args.horizon)?,
        None => oracle.count_av(&spec, args.horizon)?,
    };
    let csv = counts.to_csv()?;
    if let Some(path) = &args.out {
        fs::write(path, &csv).map_err(|e| Failure::Core(Error::Cache(format!("{}: {e}", path.display()))))?;
    }
    let growth = growth_estimate(&counts).ok();
    let mut text = csv.clone();
    if let Some(g) = &growth {
        text.push_str(&format!("growth: {g}\n"));
    }
    let result = json!({
        "basis": spec.basis(),
        "counts": counts.values(),
        "table": counts,
        "growth": growth,
    });
    Ok(Output::ok(result, text))
}

pub fn verify(args: &VerifyArgs, oracle: &Oracle) -> Result<Output, Failure> {
    let suite: Suite = args.suite.parse().map_err(Failure::Usage)?;
    let horizon = args.horizon.unwrap_or_else(|| suite.default_horizon());
    let report = run_suite(suite, horizon, oracle)?;
    let passed = report.passed();
    Ok(Output {
        text: report.render(),
        result: json!({ "passed": passed, "report": report }),
        exit: if passed { exit::OK } else { exit::VERIFICATION },
    })
}

pub fn diagram(args: &DiagramArgs) -> Result<Output, Failure> {
    let p = parse_permutation(&args.perm)?;
    let grid = render_diagram(&p, &args.highlight)?;
    let rows: Vec<&str> = grid.lines().collect();
    let result = json!({ "permutation": p, "highlight": args.highlight, "rows": rows });
    Ok(Output::ok(result, grid))
}

pub fn inputs_of(command: &crate::args::Command) -> Inputs {
    use crate::args::Command as C;
    let path = |p: &Option<std::path::PathBuf>| p.as_ref().map(|p| p.display().to_string());
    match command {
        C::Apply(a) => Inputs::Apply {
            perm: a.perm.clone(),
            chain: a.chain.clone(),
            k: a.k,
            trace: a.trace,
        },
        C::Classify(a) => Inputs::Classify { perm: a.perm.clone() },
        C::Basis(a) => Inputs::Basis {
            input: a.input.clone(),
            verify: a.verify,
            horizon: a.horizon,
        },
        C::Enumerate(a) => Inputs::Enumerate {
            basis: a.basis.clone(),
            horizon: a.horizon,
            out: path(&a.out),
            cache: path(&a.cache),
        },
        C::Verify(a) => Inputs::Verify {
            suite: a.suite.clone(),
            horizon: a.horizon,
        },
        C::Diagram(a) => Inputs::Diagram {
            perm: a.perm.clone(),
            highlight: a.highlight.clone(),
        },
    }
}

pub fn run(command: &crate::args::Command, oracle: &Oracle) -> Result<Output, Failure> {
    use crate::args::Command as C;
    match command {
        C::Apply(a) => apply(a),
        C::Classify(a) => classify_cmd(a),
        C::Basis(a) => basis(a, oracle),
        C::Enumerate(a) => enumerate(a, oracle),
        C::Verify(a) => verify(a, oracle),
        C::Diagram(a) => diagram(a),
    }
}
