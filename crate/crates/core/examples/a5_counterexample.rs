//! In A5 no nontrivial 5-subgroup is an NE-subgroup, so the restricted
//! NE-norm for p = 5 is all of A5 while the Sylow 5-norm is trivial.

use omega_norm::catalog::alternating;
use omega_norm::embedding::is_ne_subgroup;
use omega_norm::norms::{omega_p_norm, sylow_p_norm, ClassKind, NormOptions};
use omega_norm::{GroupContext, Property};

fn main() -> omega_norm::Result<()> {
    let a5 = alternating(5)?;
    let ctx = GroupContext::new(&a5);
    let sylow = ctx.sylow(5)?;
    let h = &sylow[0];
    println!(
        "{} Sylow 5-subgroups, H = <{}>",
        sylow.len(),
        h.generator_perms()[0]
    );
    println!("|N(H)| = {}", ctx.normalizer(h).order());
    println!("H is NE: {}", is_ne_subgroup(&ctx, h));
    println!("|H^G| = {}", ctx.normal_closure(h).order());

    let ne = ClassKind::Property(Property::NeSubgroup);
    for include_trivial in [false, true] {
        let opts = NormOptions {
            include_trivial,
            ..NormOptions::default()
        };
        let n = omega_p_norm(&ctx, ne, 5, opts)?;
        println!(
            "NE 5-norm (trivial subgroup included: {include_trivial}) has order {}",
            n.order()
        );
    }
    println!("Sylow 5-norm has order {}", sylow_p_norm(&ctx, 5)?.order());
    Ok(())
}
