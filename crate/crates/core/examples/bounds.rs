//! Known bounds on the Borsuk number and where the exponential lower bound overtakes n + 1.
use borsuk::larman::bounds::format_bounds;
use borsuk::larman::{bounds_table, kk_crossover};

fn main() {
    let rows: Vec<_> = [2, 3, 4, 10, 100, 1000].into_iter().map(bounds_table).collect();
    print!("{}", format_bounds(&rows));
    let c = kk_crossover();
    println!("1.07^√n first exceeds n + 1 at n = {}", c.n);
}
