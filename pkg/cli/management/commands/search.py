from algebras.services import VerificationService
from analysis.models import BASIS_OBSTRUCTION, BOUND_EXHAUSTED
from analysis.search import grading_search
from cli.base import AlgebraCommand, EXIT_UNDECIDED, EXIT_VIOLATED
from cli.repositories import AlgebraDocumentRepository


class Command(AlgebraCommand):
    help = "Search for a (Z2)^m degree map, m <= max-n, making the algebra Gamma-commutative"

    def add_arguments(self, parser):
        parser.add_argument('file')
        parser.add_argument('--max-n', type=int, required=True, dest='max_n')
        parser.add_argument('--budget', type=int, help="Node budget; the configured limit when omitted")
        parser.add_argument('--out', help="Write the regraded document here")

    def run(self, file, max_n, budget=None, out=None, **options):
        algebra = self.load(file)
        outcome = grading_search(algebra, max_n, node_budget=budget)

        if outcome.status == BASIS_OBSTRUCTION:
            i, j = outcome.witness
            self.stdout.write(f"{outcome.status} at ({algebra.labels[i]}, {algebra.labels[j]})")
            self.fail(f"no degree map exists for this basis of {algebra}", returncode=EXIT_VIOLATED)
        if outcome.status == BOUND_EXHAUSTED:
            self.stdout.write(f"{outcome.status} at m={outcome.m} after {outcome.nodes} nodes")
            self.fail(f"search budget exhausted for {algebra}", returncode=EXIT_UNDECIDED)
        if not outcome.found:
            self.stdout.write(f"{outcome.status} (max_n={max_n}, {outcome.nodes} nodes)")
            self.fail(f"no degree map into (Z2)^m for m <= {max_n}", returncode=EXIT_VIOLATED)

        self.stdout.write(f"{outcome.status} in (Z2)^{outcome.m} after {outcome.nodes} nodes")
        for label, degree in zip(algebra.labels, outcome.degrees):
            self.stdout.write(f"  {label}: {degree}")
        regraded = algebra.with_degrees(outcome.degrees, name=f"{algebra} graded by (Z2)^{outcome.m}")
        service = VerificationService()
        failures = self.write_reports([
            service.check_grading(regraded),
            service.check_gamma_commutativity(regraded),
        ])
        if failures:
            self.fail(f"degree map found for {algebra} fails the independent checks")
        if out:
            path = AlgebraDocumentRepository.save(regraded, out)
            self.stdout.write(self.style.SUCCESS(f"Wrote {regraded} to {path}"))
