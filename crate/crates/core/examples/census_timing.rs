use std::time::Instant;

fn main() {
    let hi: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(26);
    let start = Instant::now();
    for row in numsemi::census_range(16, hi).unwrap() {
        println!("{},{},{},{}", row.genus, row.ns, row.b2s, row.b2pfs);
    }
    eprintln!("elapsed {:?}", start.elapsed());
}
