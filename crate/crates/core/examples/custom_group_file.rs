//! Builds a group from generators, saves it as a group file, reloads it and
//! lists its Sylow subgroups and central series.

use omega_norm::catalog::{load_group_file, GroupFile};
use omega_norm::series::{derived_series, upper_central_series};
use omega_norm::{group_from_generators, Permutation, Subgroup};

fn main() -> omega_norm::Result<()> {
    // D8 acting on six points: the square symmetries, with reflections also swapping 4 and 5
    let a = Permutation::from_cycles(6, &[&[0, 1, 2, 3]])?;
    let b = Permutation::from_cycles(6, &[&[0, 2], &[4, 5]])?;
    let g = group_from_generators("G", 6, vec![a, b], 10_000)?;

    let dir = std::env::temp_dir().join("omega-norm-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("G.group.json");
    std::fs::write(
        &path,
        serde_json::to_string_pretty(&GroupFile::from_group(&g))?,
    )?;
    let g = load_group_file(&path)?;
    println!(
        "loaded {} from {}: order {}",
        g.name(),
        path.display(),
        g.order()
    );

    for p in omega_norm::primes::prime_divisors(g.order() as u64) {
        let s = omega_norm::sylow::sylow_subgroups(&g, p)?;
        println!(
            "p = {p}: {} Sylow subgroups of order {}",
            s.len(),
            s[0].order()
        );
    }
    println!(
        "upper central series: {:?}",
        upper_central_series(&g).orders()
    );
    let derived: Vec<usize> = derived_series(&g).iter().map(Subgroup::order).collect();
    println!("derived series: {derived:?}");
    Ok(())
}
