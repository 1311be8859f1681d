from analysis.models import NOT_SIMPLE, SIMPLE, UNSUPPORTED
from analysis.services import StructureAnalysisService
from cli.base import AlgebraCommand, EXIT_UNDECIDED, EXIT_VIOLATED
from cli.formatting import format_coordinates


class Command(AlgebraCommand):
    help = "Decide whether an algebra is simple (exit 0 simple, 1 not simple, 3 indeterminate)"

    def add_arguments(self, parser):
        parser.add_argument('file')
        parser.add_argument('--graded', action='store_true', help="Also report graded-simplicity")

    def run(self, file, graded=False, **options):
        algebra = self.load(file)
        service = StructureAnalysisService()
        verdict = service.is_simple(algebra)
        self.stdout.write(verdict.status)
        self.stdout.write(f"reason: {verdict.reason}")
        if verdict.witness is not None:
            self.stdout.write(f"witness: {verdict.witness}")
            for row in verdict.witness.rows:
                self.stdout.write(f"  {format_coordinates(algebra, row)}")
        if graded:
            if algebra.is_graded:
                self.stdout.write(f"graded: {service.is_graded_simple(algebra).summary()}")
            else:
                self.stdout.write(f"graded: {UNSUPPORTED} (no degree map)")

        if verdict.status == NOT_SIMPLE:
            self.fail(f"{algebra} is not simple", returncode=EXIT_VIOLATED)
        if verdict.status != SIMPLE:
            self.fail(f"simplicity of {algebra} is indeterminate", returncode=EXIT_UNDECIDED)
