//! Pooled distance profile and radius of random genus-g quadrangulations,
//! computed on the tree side.
//!
//! cargo run --release --example profile -- [g] [n] [samples] [bins] [seed]

use unimap::stats::pooled_profile;

fn main() -> unimap::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let g = *args.first().unwrap_or(&1) as usize;
    let n = *args.get(1).unwrap_or(&2000) as usize;
    let samples = *args.get(2).unwrap_or(&200) as usize;
    let bins = *args.get(3).unwrap_or(&30) as usize;
    let seed = *args.get(4).unwrap_or(&1);
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());

    let p = pooled_profile(g, n, samples, seed, workers)?;
    println!("every profile has mass 1: {}", p.all_unit_mass);
    println!("mean radius: {:.4}", p.mean_radius());
    print!("{}", p.to_gnuplot(bins));
    Ok(())
}
