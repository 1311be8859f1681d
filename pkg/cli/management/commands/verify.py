from algebras.services import VerificationService
from cli.base import AlgebraCommand

CHECKS = ('assoc', 'grading', 'gamma-comm', 'cocycle')


class Command(AlgebraCommand):
    help = "Run structural checks on an algebra document; exit 1 on the first violated property"

    def add_arguments(self, parser):
        parser.add_argument('file')
        parser.add_argument(
            '--check', action='append', choices=CHECKS, dest='checks',
            help="Check to run (repeatable); all four when omitted"
        )

    def run(self, file, checks=None, **options):
        algebra = self.load(file)
        reports = VerificationService().run_checks(algebra, checks or list(CHECKS))
        failures = self.write_reports(reports)
        if failures:
            self.fail(f"{failures} of {len(reports)} checks failed on {algebra}")
