from cli.base import AlgebraCommand
from constructions.models import GeneratorMap
from constructions.services import IsomorphismService


class Command(AlgebraCommand):
    help = "Check that a generator assignment extends to an isomorphism A -> B"

    def add_arguments(self, parser):
        parser.add_argument('file_a')
        parser.add_argument('file_b')
        parser.add_argument('--map', required=True, dest='assignment', help="Assignments like a1=e1,a2=e2")

    def run(self, file_a, file_b, assignment, **options):
        source, target = self.load(file_a), self.load(file_b)
        generator_map = GeneratorMap.parse(source, target, assignment)
        report = IsomorphismService().check_generator_iso(generator_map)
        if self.write_reports([report]):
            self.fail(f"{assignment} does not extend to an isomorphism {source} -> {target}")
