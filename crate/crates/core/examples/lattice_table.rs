//! Prints the subgroup lattice of a builtin group with its embedding flags.
//!
//!     cargo run --example lattice_table -- dihedral:8

use omega_norm::catalog::parse_builtin;
use omega_norm::{GroupContext, Property};

fn main() -> omega_norm::Result<()> {
    let desc = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "symmetric:4".into());
    let g = parse_builtin(&desc, 20_000)?;
    let ctx = GroupContext::new(&g);
    let lattice = ctx.lattice()?;
    let flags: Vec<&[bool]> = Property::ALL
        .iter()
        .map(|&p| ctx.membership(p))
        .collect::<omega_norm::Result<_>>()?;

    println!("{}: {} subgroups", g.name(), lattice.len());
    print!("{:>4} {:>6} {:>7}", "#", "order", "normal");
    for p in Property::ALL {
        print!(" {:>5}", &p.id()[..5]);
    }
    println!();
    for (i, h) in lattice.iter().enumerate() {
        print!("{i:>4} {:>6} {:>7}", h.order(), h.is_normal());
        for f in &flags {
            print!(" {:>5}", if f[i] { "x" } else { "." });
        }
        println!();
    }
    Ok(())
}
