from analysis.services import StructureAnalysisService
from cli.base import AlgebraCommand
from cli.formatting import format_coordinates, parse_element
from algebras.models import format_terms


class Command(AlgebraCommand):
    help = "Print the two-sided ideal generated by the given elements"

    def add_arguments(self, parser):
        parser.add_argument('file')
        parser.add_argument(
            '--gen', action='append', required=True, dest='generators',
            help="Generator as a linear expression in the basis labels, e.g. 1+a1 (repeatable)"
        )

    def run(self, file, generators, **options):
        algebra = self.load(file)
        generator_elements = [parse_element(algebra, text) for text in generators]
        ideal = StructureAnalysisService().ideal_closure(algebra, generator_elements)
        self.stdout.write(f"dimension: {ideal.dimension} of {algebra.dimension}")
        self.stdout.write(f"proper: {'no' if ideal.is_whole() else 'yes'}")
        for row in ideal.rows:
            self.stdout.write(f"  {format_coordinates(algebra, row)}  {format_terms(algebra, row).lstrip('+')}")
