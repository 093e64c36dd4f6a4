"""Run the full claim catalog and show anything that is not a plain pass."""
from rslab.claims import PASS, claim_catalog, format_table, known_discrepancies, verify_claims

results, summary = verify_claims(claim_catalog(9))
print(format_table([r for r in results if r.verdict != PASS or r.expected is None],
                   summary, known_discrepancies()))
