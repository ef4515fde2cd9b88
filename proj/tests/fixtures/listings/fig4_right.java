class DrawingController {
  JButton but1;
  JButton but2;
  Canvas canvas;

  DrawingController() {
    but1 = new JButton();
    but1.addActionListener(e -> {
      canvas.undo();
    });
    but2 = new JButton();
    but2.addActionListener(e -> {
      canvas.redo();
    });
  }
}
