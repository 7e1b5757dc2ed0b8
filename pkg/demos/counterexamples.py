"""Hunting misprints: run the harness on two reduction formulas as printed.

Both fail, but only on a thin slice of the admissible characters.  Each
has a restated twin (suffix -D) rebuilt from the formula it specializes,
and the twin passes everywhere.
"""
import json

from ffkdf import eval_identity_case, verify_identity

for ident, locus in (("COR-2c", "a + c = b"), ("COR-5b", "b + c = 0")):
    for spec in ("7", "3^2"):
        rep = verify_identity(ident, spec)
        twin = verify_identity(ident + "-D", spec)
        print(f"{ident} over {spec}: {rep.failed}/{rep.attempted} fail; "
              f"{ident}-D: {twin.failed}/{twin.attempted} fail")
    ce = verify_identity(ident, "7").counterexample
    print(f"  first counterexample ({locus} mod q-1):", json.dumps({k: ce[k] for k in ("chars", "args")}))
    lhs, rhs = eval_identity_case(ident, "7", ce)
    print("  lhs ~", lhs[0].to_complex(), " rhs ~", rhs[0].to_complex())
