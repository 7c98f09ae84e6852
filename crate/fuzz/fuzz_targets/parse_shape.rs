#![no_main]

use libfuzzer_sys::fuzz_target;
use svtab::SkewShape;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(shape) = text.parse::<SkewShape>() {
        let again: SkewShape = shape.to_string().parse().expect("display output reparses");
        assert_eq!(again, shape);
        assert_eq!(shape.cells_row_major().len(), shape.size());
    }
});
