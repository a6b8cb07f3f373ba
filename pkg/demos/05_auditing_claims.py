"""Machine-checked verdicts on the claims about composite devices."""
from ctxlogic.audit import (
    closure_audit,
    context_recognition_demo,
    isometry_audit,
    nearest_product_audit,
    pairing_audit,
    theorem2_audit,
)

for audit in (theorem2_audit, closure_audit, isometry_audit, pairing_audit, nearest_product_audit):
    report = audit()
    print(report.to_text(max_items=2))
    print()

# Context recognition: the second unit reads off the hidden correlation.
for c in ("-1/4", "0", "1/4"):
    print(context_recognition_demo(c).to_text())
    print()
