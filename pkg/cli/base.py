"""Shared plumbing for the algebra management commands."""
import logging

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import AlgebraError
from core.reports import VerificationReport
from algebras.models import GradedAlgebra
from cli.repositories import AlgebraDocumentRepository

logger = logging.getLogger(__name__)

EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


class AlgebraCommand(BaseCommand):
    """Runs ``run(**options)`` and maps rejected input to exit code 2.

    Subclasses raise CommandError with EXIT_VIOLATED or EXIT_UNDECIDED
    themselves once their report is printed.
    """

    requires_system_checks = []

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except CommandError:
            raise
        except AlgebraError as e:
            logger.error(f"{self.__module__.rsplit('.', 1)[-1]} rejected its input: {str(e)}")
            raise CommandError(str(e), returncode=EXIT_USAGE) from e

    def run(self, **options):
        raise NotImplementedError

    def load(self, path: str) -> GradedAlgebra:
        return AlgebraDocumentRepository.load(path)

    def write_reports(self, reports) -> int:
        """Print one summary line per report; return the number of failures."""
        failures = 0
        for report in reports:
            line = report.summary()
            if report.passed:
                self.stdout.write(line)
            else:
                failures += 1
                self.stdout.write(self.style.ERROR(line))
        return failures

    def fail(self, message: str, returncode: int = EXIT_VIOLATED):
        raise CommandError(message, returncode=returncode)


def passed(report: VerificationReport) -> str:
    return "PASS" if report.passed else "FAIL"
