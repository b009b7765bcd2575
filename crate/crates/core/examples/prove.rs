use gammacert::graphs::KernelKind;
use gammacert::kernels::prove::prove_conjecture;

fn main() {
    let kind = if std::env::args().nth(1).as_deref() == Some("trees") { KernelKind::Tree } else { KernelKind::Graph };
    let c = prove_conjecture(kind).unwrap();
    for l in &c.links {
        println!("{} {} {}", if l.pass { "PASS" } else { "FAIL" }, l.name, l.summary);
    }
    println!("overall {} in {} ms", c.pass, c.elapsed_ms);
}
