#![no_main]

use libfuzzer_sys::fuzz_target;
use svtab::MultiPoly;

fuzz_target!(|data: &[u8]| {
    if data.len() > 512 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = MultiPoly::parse(text, 3) {
        let again = MultiPoly::parse(&p.to_string(), 3).expect("display output reparses");
        assert_eq!(again, p);
    }
});
