//! Writes SVG drawings of nested Fine adjoints to the temp directory.

use fine_adjunction::exactla::rat;
use fine_adjunction::harness::corpus;
use fine_adjunction::harness::svg::{emit_svg, Mode};

fn main() -> fine_adjunction::Result<()> {
    let dir = std::env::temp_dir();
    let drawings = [
        ("hexagon", corpus::hexagon(), vec![rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1)], Mode::Fine),
        ("triangle", corpus::wide_triangle(), vec![rat(1, 4)], Mode::Both),
        ("square", corpus::square(3), vec![rat(1, 1)], Mode::Fine),
    ];
    for (name, p, levels, mode) in drawings {
        let svg = emit_svg(&p, &levels, mode)?;
        let path = dir.join(format!("fineadj_{name}.svg"));
        std::fs::write(&path, &svg)?;
        println!("{} ({} bytes)", path.display(), svg.len());
    }
    Ok(())
}
