//! Largest families of 2p-subsets of {1..4p} with no overlap of exactly p.
use borsuk::larman::fw_lemma3_search;

fn main() -> borsuk::Result<()> {
    for p in [1, 2, 3] {
        let r = fw_lemma3_search(p, 10_000_000)?;
        match r.m_found {
            Some(m) => println!("p={p}: largest family {m} (exact: {}), bound {}", r.exact, r.bound),
            None => println!("p={p}: bound {} only", r.bound),
        }
    }
    Ok(())
}
