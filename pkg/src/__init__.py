# Diagrammatic-set shapes: oriented graded posets, molecules, maps and constructions
