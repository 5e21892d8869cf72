fn main() {
    let t = std::time::Instant::now();
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let mut counts = vec![0u64; max + 1];
    ncstone_core::semilattices::for_each_meet_semilattice(max, |s| counts[s.size()] += 1);
    println!("{counts:?} {:?}", t.elapsed());
}
