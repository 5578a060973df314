"""
Reproducing the published tables
================================

Table 2 (anchor 3/2) is reproduced to all printed digits.  Table 1 (anchor 1)
uses closed-form coefficients in zeta values, and only its first two rows are
consistent with them.  The audit lists every comparison with a signed delta.
"""

from lagrangemin import PrecisionConfig, discrepancy_report, table

cfg = PrecisionConfig(20)

for table_id in (1, 2):
    report = table(table_id, cfg)
    print(f"Table {table_id}: {report.method_note}")
    for row in report.rows:
        print(f"  {row.computed.to_str(10):>12} {row.paper_value.to_str(10):>12} {row.delta.to_str(3):>10}  {row.label}")

###############################################################################
# The discrepancy report

audit = discrepancy_report(cfg)
print("psi root:", audit["psi_root"].to_str(20))
for rec in audit["records"]:
    print(f"  a={rec.anchor:<4} n={rec.order} {rec.lhs_name} - {rec.rhs_name} = {rec.delta.to_str(3)}")
for note in audit["notes"]:
    print(" *", note)
