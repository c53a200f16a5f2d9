//! Moment and probability estimates of t_g on uniform labelled trees.
//!
//! cargo run --release --example estimate_tg -- [g] [n] [samples] [seed]

use unimap::stats::{estimate_tg_moment, estimate_tg_probability, Estimate};

fn main() -> unimap::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let g = *args.first().unwrap_or(&1) as usize;
    let n = *args.get(1).unwrap_or(&1000) as usize;
    let samples = *args.get(2).unwrap_or(&20_000) as usize;
    let seed = *args.get(3).unwrap_or(&1);
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());

    let moment = estimate_tg_moment(g, n, samples, seed, workers)?;
    let prob = estimate_tg_probability(g, n, samples, seed, workers)?;
    println!("{}", Estimate::CSV_HEADER);
    println!("{}", moment.csv_row());
    println!("{}", prob.csv_row());
    println!("difference in combined standard errors: {:.2}", moment.z_score(&prob));
    Ok(())
}
