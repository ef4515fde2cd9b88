class DrawingController implements ActionListener {
  JButton but1;
  JButton but2;
  Canvas canvas;

  DrawingController() {
    but1 = new JButton();
    but1.setActionCommand("undo");
    but1.addActionListener(this);
    but2 = new JButton();
    but2.setActionCommand("redo");
    but2.addActionListener(this);
  }

  public void actionPerformed(ActionEvent e) {
    if (e.getActionCommand().equals("undo")) {
      canvas.undo();
      return;
    }
    if (e.getActionCommand().equals("redo")) {
      canvas.redo();
      return;
    }
  }
}
