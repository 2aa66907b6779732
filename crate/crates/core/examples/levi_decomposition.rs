//! The wreath-product shape of relative Weyl groups N_{W^F}(I) / W_I^F.

use levikit::levi::decompose;
use levikit::root_datum::{standard, Isogeny};
use levikit::weyl::{Twist, WeylGroup};

fn main() -> levikit::Result<()> {
    let a5 = WeylGroup::generate(&standard("A5", Isogeny::SimplyConnected)?)?;
    let split = Twist::identity(&a5);
    let flip = Twist::from_diagram(&a5, &[4, 3, 2, 1, 0])?;
    let d4 = WeylGroup::generate(&standard("D4", Isogeny::SimplyConnected)?)?;
    let triality = Twist::from_diagram(&d4, &[2, 1, 3, 0])?;

    for (name, w, f, i) in [
        ("A5", &a5, &split, vec![0, 2, 4]),
        ("A5", &a5, &split, vec![0, 1, 3, 4]),
        ("2A5", &a5, &flip, vec![0, 4]),
        ("3D4", &d4, &triality, vec![0, 2, 3]),
    ] {
        let d = decompose(w, f, &i)?;
        let shape: Vec<String> = d.wreath_shape().iter().map(|c| format!("({}, {}, {})", c.cartan_type, c.autos, c.n)).collect();
        println!("{name} I = {i:?}: relative order {} = {} * {}, shape [{}]",
            d.relative_order, d.centralizer_order, d.image_order, shape.join(", "));
    }
    Ok(())
}
