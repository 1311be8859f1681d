from cli.base import AlgebraCommand
from cli.formatting import table_lines


class Command(AlgebraCommand):
    help = "Print the multiplication table of an algebra document"

    def add_arguments(self, parser):
        parser.add_argument('file')

    def run(self, file, **options):
        for line in table_lines(self.load(file)):
            self.stdout.write(line)
