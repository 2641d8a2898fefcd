//! Z(Q16) < N_SC(Q16) = Z2(Q16) < Z3(Q16) = Q16.

use omega_norm::catalog::dicyclic;
use omega_norm::norms::{omega_norm, NormOptions, OmegaClass};
use omega_norm::{GroupContext, Property};

fn main() -> omega_norm::Result<()> {
    let q16 = dicyclic(4)?;
    let ctx = GroupContext::new(&q16);
    let series = ctx.upper_central_series();
    let n_sc = omega_norm(
        &ctx,
        OmegaClass::property(Property::SelfCentralizing),
        NormOptions::default(),
    )?;

    println!(
        "{} (order {}, degree {})",
        q16.name(),
        q16.order(),
        q16.degree()
    );
    println!("upper central series orders: {:?}", series.orders());
    println!("|Z|    = {}", ctx.center().order());
    println!("|N_SC| = {}", n_sc.order());
    println!("|Z2|   = {}", series.term(2).order());
    println!("|Z3|   = {}", series.term(3).order());
    println!("N_SC = Z2: {}", &n_sc == series.term(2));
    for g in n_sc.generator_perms() {
        println!("  N_SC generator {g}");
    }
    Ok(())
}
