//! Every Ω-norm of a handful of groups next to the hypercenter and the norm.

use omega_norm::catalog::parse_builtin;
use omega_norm::norms::{baer_norm, omega_norm, sylow_norm, NormOptions, OmegaClass};
use omega_norm::{GroupContext, Property};

fn main() -> omega_norm::Result<()> {
    for desc in [
        "symmetric:3",
        "dihedral:8",
        "dicyclic:4",
        "alternating:4",
        "frobenius_21",
        "dihedral:8*cyclic:3",
    ] {
        let g = parse_builtin(desc, 20_000)?;
        let ctx = GroupContext::new(&g);
        let mut row = vec![
            ("Z", ctx.center().order()),
            ("Zinf", ctx.hypercenter().order()),
            ("Syl", sylow_norm(&ctx).order()),
            ("N", baer_norm(&ctx, NormOptions::default())?.order()),
        ];
        for p in Property::ALL {
            let n = omega_norm(&ctx, OmegaClass::property(p), NormOptions::default())?;
            row.push((p.id(), n.order()));
        }
        let cells: Vec<String> = row.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{:<6} {}", g.name(), cells.join(" "));
    }
    Ok(())
}
