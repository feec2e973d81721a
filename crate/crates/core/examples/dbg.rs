use meromul::poly::parse_poly;
use meromul::resolution::log_resolution;
fn main() {
    let p = |s: &str| parse_poly(s).unwrap();
    let f = p("(y^2-x^3)^5 + x^18");
    for k in 0..=5u32 {
        let g = p("y^2-x^3").pow(k);
        let t0 = std::time::Instant::now();
        let res = log_resolution(&f, &g).unwrap();
        println!("k={k}: {} comps in {:?}; N = {:?}", res.len(), t0.elapsed(), res.n_vector());
        for b in &res.affine {
            println!("   branch att={:?} mf={} mg={}", b.attachment, b.mult_f, b.mult_g);
        }
    }
}
