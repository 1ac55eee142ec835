"""Print the GU(8) and O+(8) generator lists at q = 2 with their degrees."""
from sylow_inv import families as fam
from sylow_inv import groups as grp
from sylow_inv.certificates import certificate_field_generation
from sylow_inv.groups import GroupSpec
from sylow_inv.suites_examples import lk_orders


def show(spec):
    print(f"== {spec.label()}, n = {spec.n}, |G| = 2^{grp.group_order(spec).bit_length() - 1}")
    gl = fam.field_generators(spec)
    for lab, f in zip(gl.labels, gl.phis):
        print(f"  {lab:<16} deg {f.degree():>4}  terms {len(f)}")
    cert = certificate_field_generation(spec)
    print("  chain:", ", ".join(f"{r.label}:{r.deg}" for r in cert.records), "verdict", cert.verdict)


gu8 = GroupSpec("gu-even", 4, 2)
show(gu8)
print("  h_1 =", fam.h_poly(gu8, 1).to_str())
print("  L_k orders:", lk_orders(gu8)[0])
show(GroupSpec("o-plus", 4, 2))
