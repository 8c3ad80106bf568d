//! A full net verification run on a small planar shell, and the plan for the 4D net.
use borsuk::net::{make_spec, plan_report, run_config, PipelineConfig};
use borsuk::Scalar;

const CONFIG: &str = r#"
n = 2
alpha = "0.95"
kappa = "1/4"
inner = 0.4
outer = 0.8
m = 3
budget = 2000
"#;

fn main() -> borsuk::Result<()> {
    let cfg = PipelineConfig::parse(CONFIG, "inline")?;
    let report = run_config(&cfg)?;
    print!("{}", report.summary());

    let spec = make_spec(4, Scalar::ratio(995, 1000))?;
    let plan = plan_report(&spec);
    println!(
        "4D net: κ = {}, {} lattice points in the outer ball, enumeration refused: {}",
        spec.kappa, plan.lattice_points, plan.enumeration_refused
    );
    Ok(())
}
